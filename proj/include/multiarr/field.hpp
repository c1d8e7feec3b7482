#pragma once

// Coefficient fields. Every algorithm in the library is templated on a field
// type F; field_traits<F> supplies the handful of operations that cannot be
// spelled with ordinary operators (zero tests, parsing, canonical forms).

#include <gmpxx.h>

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace multiarr {

using Integer = mpz_class;
using Rational = mpq_class;

namespace detail {
constexpr bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}
}  // namespace detail

/// Element of the prime field Z/PZ.
template <std::uint32_t P>
class ModP {
  static_assert(detail::is_prime(P), "ModP modulus must be prime");

 public:
  static constexpr std::uint32_t modulus = P;

  constexpr ModP() = default;
  constexpr ModP(long long v) : v_(reduce(v)) {}  // NOLINT(implicit)

  constexpr std::uint32_t value() const { return v_; }

  constexpr ModP& operator+=(ModP o) {
    std::uint64_t s = std::uint64_t(v_) + o.v_;
    v_ = static_cast<std::uint32_t>(s >= P ? s - P : s);
    return *this;
  }
  constexpr ModP& operator-=(ModP o) {
    v_ = v_ >= o.v_ ? v_ - o.v_ : static_cast<std::uint32_t>(std::uint64_t(v_) + P - o.v_);
    return *this;
  }
  constexpr ModP& operator*=(ModP o) {
    v_ = static_cast<std::uint32_t>(std::uint64_t(v_) * o.v_ % P);
    return *this;
  }
  constexpr ModP& operator/=(ModP o) { return *this *= o.inverse(); }

  constexpr ModP inverse() const {
    if (v_ == 0) throw std::domain_error("ModP: division by zero");
    return pow(P - 2);
  }
  constexpr ModP pow(std::uint64_t e) const {
    ModP base = *this, acc = 1;
    while (e) {
      if (e & 1) acc *= base;
      base *= base;
      e >>= 1;
    }
    return acc;
  }

  friend constexpr ModP operator+(ModP a, ModP b) { return a += b; }
  friend constexpr ModP operator-(ModP a, ModP b) { return a -= b; }
  friend constexpr ModP operator*(ModP a, ModP b) { return a *= b; }
  friend constexpr ModP operator/(ModP a, ModP b) { return a /= b; }
  friend constexpr ModP operator-(ModP a) { return ModP{} - a; }
  friend constexpr bool operator==(ModP a, ModP b) = default;

 private:
  static constexpr std::uint32_t reduce(long long v) {
    long long r = v % static_cast<long long>(P);
    return static_cast<std::uint32_t>(r < 0 ? r + P : r);
  }

  std::uint32_t v_ = 0;
};

template <class F>
struct field_traits;

template <>
struct field_traits<Rational> {
  static constexpr unsigned characteristic = 0;

  static std::string name() { return "rational"; }
  static Rational from_integer(const Integer& z) { return Rational(z); }
  static bool is_zero(const Rational& x) { return sgn(x) == 0; }

  static std::string to_string(const Rational& x) { return x.get_str(); }

  static Rational parse(std::string_view s) {
    Rational r;
    if (s.empty() || r.set_str(std::string(s), 10) != 0 || sgn(r.get_den()) == 0)
      throw std::invalid_argument("not a rational number: '" + std::string(s) + "'");
    r.canonicalize();
    return r;
  }

  /// Primitive integer representative with positive leading entry.
  static std::vector<Integer> canonical_form(std::vector<Integer> v) {
    Integer g = 0;
    for (const auto& c : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 0) throw std::invalid_argument("zero linear form");
    auto lead = std::find_if(v.begin(), v.end(), [](const Integer& c) { return c != 0; });
    if (sgn(*lead) < 0) g = -g;
    for (auto& c : v) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return v;
  }

  /// Scale a field vector to a canonical integer representative.
  static std::vector<Integer> canonical_form(const std::vector<Rational>& v) {
    Integer l = 1;
    for (const auto& c : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    std::vector<Integer> out;
    out.reserve(v.size());
    for (const auto& c : v) out.emplace_back(c.get_num() * (l / c.get_den()));
    return canonical_form(std::move(out));
  }
};

template <std::uint32_t P>
struct field_traits<ModP<P>> {
  using F = ModP<P>;
  static constexpr unsigned characteristic = P;

  static std::string name() { return "gf(" + std::to_string(P) + ")"; }
  static F from_integer(const Integer& z) {
    return F(static_cast<long long>(mpz_fdiv_ui(z.get_mpz_t(), P)));
  }
  static bool is_zero(const F& x) { return x.value() == 0; }
  static std::string to_string(const F& x) { return std::to_string(x.value()); }

  static F parse(std::string_view s) {
    Integer z;
    if (s.empty() || z.set_str(std::string(s), 10) != 0)
      throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
    return from_integer(z);
  }

  /// Representative with entries in [0,P) and leading entry 1.
  static std::vector<Integer> canonical_form(const std::vector<Integer>& v) {
    std::vector<F> r;
    r.reserve(v.size());
    for (const auto& c : v) r.push_back(from_integer(c));
    return canonical_form(r);
  }

  static std::vector<Integer> canonical_form(const std::vector<F>& v) {
    auto lead = std::find_if(v.begin(), v.end(), [](F c) { return c.value() != 0; });
    if (lead == v.end()) throw std::invalid_argument("zero linear form");
    F inv = lead->inverse();
    std::vector<Integer> out;
    out.reserve(v.size());
    for (F c : v) out.emplace_back(static_cast<unsigned long>((c * inv).value()));
    return out;
  }
};

template <class F>
concept Field = requires(F a, F b, Integer z) {
  { a + b } -> std::convertible_to<F>;
  { a - b } -> std::convertible_to<F>;
  { a * b } -> std::convertible_to<F>;
  { a / b } -> std::convertible_to<F>;
  { field_traits<F>::is_zero(a) } -> std::same_as<bool>;
  { field_traits<F>::from_integer(z) } -> std::convertible_to<F>;
  { field_traits<F>::to_string(a) } -> std::convertible_to<std::string>;
};

template <Field F>
inline bool is_zero(const F& x) {
  return field_traits<F>::is_zero(x);
}

template <Field F>
inline F from_int(long long v) {
  return field_traits<F>::from_integer(Integer(static_cast<long>(v)));
}

/// Binomial coefficient as a field element (computed exactly over Z first).
template <Field F>
F binomial(unsigned n, unsigned k) {
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return field_traits<F>::from_integer(b);
}

}  // namespace multiarr
