#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

using namespace multiarr;
using P = HPoly<Rational>;

namespace {

P random_poly(std::mt19937& rng, std::size_t n, int d, int density = 4) {
  std::uniform_int_distribution<int> c(-4, 4);
  const auto monos = monomials(n, d);
  std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
  P p(n, d);
  for (int k = 0; k < density; ++k) p.add_term(monos[pick(rng)], Rational(c(rng)));
  return p;
}

std::vector<Rational> random_form(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<int> c(-3, 3);
  for (;;) {
    std::vector<Rational> f(n);
    bool nz = false;
    for (auto& x : f) {
      x = c(rng);
      nz = nz || x != 0;
    }
    if (nz) return f;
  }
}

}  // namespace

TEST(Monomials, CountMatchesBinomialAndIndexMatchesPosition) {
  for (std::size_t n = 1; n <= 4; ++n)
    for (int d = 0; d <= 6; ++d) {
      const auto m = monomials(n, d);
      EXPECT_EQ(m.size(), static_cast<std::size_t>(oracle::binom(d + n - 1, n - 1)));
      EXPECT_EQ(count_monomials(n, d), m.size());
      for (std::size_t k = 0; k < m.size(); ++k) {
        EXPECT_EQ(total_degree(m[k]), d);
        EXPECT_EQ(monomial_index(m[k]), k);
        if (k) { EXPECT_TRUE(m[k - 1] > m[k]); }
      }
    }
}

TEST(HPoly, ProductAndPowerAgreeWithNaiveExpansion) {
  std::mt19937 rng(11);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 1 + t % 3;
    const P a = random_poly(rng, n, t % 4), b = random_poly(rng, n, (t + 1) % 3);
    EXPECT_EQ(support::to_oracle(a * b), oracle::mul(support::to_oracle(a), support::to_oracle(b)));
    EXPECT_EQ(support::to_oracle(a.pow(3)), oracle::power(support::to_oracle(a), 3, n));
    EXPECT_EQ(support::to_oracle(a + a), oracle::scale(support::to_oracle(a), 2));
  }
}

TEST(HPoly, RejectsTermsOfTheWrongDegree) {
  P p(3, 2);
  EXPECT_THROW(p.add_term({1, 0, 0}, Rational(1)), std::invalid_argument);
  EXPECT_THROW(p.add_term({1, 1}, Rational(1)), std::invalid_argument);
}

TEST(HPoly, PrintsGradedLexWithExplicitCoefficients) {
  const P f = P::linear({Rational(1), Rational(-2)}).pow(2);
  EXPECT_EQ(f.to_string(), "x1^2 - 4*x1*x2 + 4*x2^2");
  EXPECT_EQ(P(2, 3).to_string(), "0");
  EXPECT_EQ((P::linear({Rational(1, 2), Rational(0), Rational(-1)})).to_string(), "1/2*x1 - x3");
}

TEST(HPoly, DivisibilityByFormPowersMatchesDirectionalDerivativeTest) {
  std::mt19937 rng(5);
  for (int t = 0; t < 80; ++t) {
    const std::size_t n = 2 + t % 3;
    const auto alpha = random_form(rng, n);
    const int k = t % 4;
    P f = P::linear(alpha).pow(k) * random_poly(rng, n, 2);
    if (t % 3 == 0) f += random_poly(rng, n, k + 2, 2);
    for (unsigned m = 0; m <= 5; ++m)
      EXPECT_EQ(divisible_by_form_power(f, alpha, m), oracle::divisible(support::to_oracle(f), alpha, static_cast<int>(m)))
          << f.to_string() << " m=" << m;
  }
}

TEST(HPoly, ExactQuotientByFormPower) {
  std::mt19937 rng(8);
  for (int t = 0; t < 30; ++t) {
    const auto alpha = random_form(rng, 3);
    const P g = random_poly(rng, 3, 2);
    const P f = P::linear(alpha).pow(3) * g;
    auto q = hpoly_divide_by_form(f, alpha, 2);
    ASSERT_TRUE(q.has_value());
    EXPECT_EQ(*q, P::linear(alpha) * g);
    if (!g.is_zero() && !divisible_by_form_power(g, alpha, 1)) { EXPECT_FALSE(hpoly_divide_by_form(f, alpha, 4).has_value()); }
  }
}

TEST(HPoly, SubstitutionAgreesWithComposition) {
  std::mt19937 rng(3);
  for (int t = 0; t < 30; ++t) {
    const P f = random_poly(rng, 3, 3);
    std::vector<P> images;
    std::vector<oracle::Poly> oimages;
    for (int i = 0; i < 3; ++i) {
      images.push_back(P::linear(random_form(rng, 2)));
      oimages.push_back(support::to_oracle(images.back()));
    }
    EXPECT_EQ(support::to_oracle(substitute(f, images)), oracle::compose(support::to_oracle(f), oimages, 2));
  }
}

TEST(HPoly, ModularArithmeticWrapsCoefficients) {
  using G = HPoly<ModP<3>>;
  const G f = G::linear({ModP<3>(1), ModP<3>(1)}).pow(3);  // Frobenius: x1^3 + x2^3
  EXPECT_EQ(f.size(), 2u);
  EXPECT_EQ(f.coefficient({3, 0}).value(), 1u);
  EXPECT_EQ(f.coefficient({2, 1}).value(), 0u);
}
