#pragma once

// Euler multiplicities m*(X) of the restriction to a hyperplane H0, the
// restricted multiarrangement (A'', m*), and the B-polynomial.

#include <algorithm>
#include <cstddef>
#include <iterator>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "multiarr/arrangement.hpp"
#include "multiarr/derivation.hpp"
#include "multiarr/rank2.hpp"

namespace multiarr {

enum class EulerMethod { case1, case2, case3, case4, case5, case6, case7, fallback };

inline std::string to_string(EulerMethod m) {
  switch (m) {
    case EulerMethod::case1: return "case(1)";
    case EulerMethod::case2: return "case(2)";
    case EulerMethod::case3: return "case(3)";
    case EulerMethod::case4: return "case(4)";
    case EulerMethod::case5: return "case(5)";
    case EulerMethod::case6: return "case(6)";
    case EulerMethod::case7: return "case(7)";
    case EulerMethod::fallback: return "fallback";
  }
  return "?";
}

struct FastPathValue {
  int value = 0;
  EulerMethod method = EulerMethod::fallback;
  friend bool operator==(const FastPathValue&, const FastPathValue&) = default;
};

namespace detail {

inline void validate_local(int k, int m0, int m1, int total, const std::vector<int>& mx) {
  if (k < 2) throw std::invalid_argument("euler: localization needs at least two hyperplanes");
  if (static_cast<int>(mx.size()) != k) throw std::invalid_argument("euler: multiplicity list length differs from k");
  for (int v : mx)
    if (v < 1) throw std::invalid_argument("euler: multiplicities must be positive");
  if (m0 < 1 || m1 < 1) throw std::invalid_argument("euler: multiplicities must be positive");
  if (std::accumulate(mx.begin(), mx.end(), 0) != total) throw std::invalid_argument("euler: |m_X| mismatch");
  if (std::find(mx.begin(), mx.end(), m0) == mx.end()) throw std::invalid_argument("euler: m0 not in list");
  if (m0 + m1 > total) throw std::invalid_argument("euler: m0 + m1 exceeds |m_X|");
}

}  // namespace detail

/// Every closed-form case whose hypothesis holds, in precedence order
/// (1),(2),(3),(6),(4),(5),(7). `mx` is the full multiplicity list of A_X.
inline std::vector<FastPathValue> euler_fast_path_all(int k, int m0, int m1, int total, const std::vector<int>& mx) {
  detail::validate_local(k, m0, m1, total, mx);
  std::vector<FastPathValue> out;
  if (k == 2) out.push_back({m1, EulerMethod::case1});
  if (2 * m0 >= total) out.push_back({total - m0, EulerMethod::case2});
  if (2 * m1 >= total - 1) out.push_back({m1, EulerMethod::case3});
  if (std::all_of(mx.begin(), mx.end(), [](int v) { return v == 2; })) out.push_back({k, EulerMethod::case6});
  if (total <= 2 * k - 1 && m0 > 1) out.push_back({k - 1, EulerMethod::case4});
  if (total <= 2 * k - 2 && m0 == 1) out.push_back({total - k + 1, EulerMethod::case5});
  if (k == 3 && 2 * m0 <= total && 2 * m1 <= total) out.push_back({total / 2, EulerMethod::case7});
  return out;
}

inline std::optional<FastPathValue> euler_fast_path(int k, int m0, int m1, int total, const std::vector<int>& mx) {
  auto all = euler_fast_path_all(k, m0, m1, total, mx);
  if (all.empty()) return std::nullopt;
  return all.front();
}

struct EulerOptions {
  bool use_fast_path = true;
  bool check_all_cases = false;  // assert that every applicable case agrees
  bool cross_check = false;      // compare against fallback and theta/psi split
};

struct EulerReport {
  Flat2 flat;
  int k = 0;
  int m0 = 0;
  int m1 = 0;
  int total = 0;  // |m_X|
  int value = 0;  // m*(X)
  EulerMethod method = EulerMethod::fallback;
};

/// exp(A_X,m_X) and exp(A_X',m_X') share exactly one value; it is m*(X).
template <Field F>
int euler_fallback(const Localization<F>& loc) {
  const auto e = essentialize_2d(loc.arrangement);
  const std::size_t h2 = e.target[loc.host];
  auto full = rank2_exponents(e.arrangement);
  auto del = rank2_exponents(deletion(e.arrangement, h2));
  std::vector<int> common;
  std::set_intersection(full.begin(), full.end(), del.begin(), del.end(), std::back_inserter(common));
  if (common.size() != 1) throw std::logic_error("euler_fallback: exponent multisets do not share exactly one value");
  return common.front();
}

template <Field F>
EulerReport euler_multiplicity(const Multiarrangement<F>& a, std::size_t h0, const Flat2& x,
                               const EulerOptions& opt = {}) {
  if (x.host != h0) throw ArrangementError("euler_multiplicity: flat does not lie on H0");
  EulerReport r;
  r.flat = x;
  r.k = static_cast<int>(x.hyperplanes.size());
  r.m0 = a.mult(h0);
  std::vector<int> mx;
  for (std::size_t i : x.hyperplanes) {
    mx.push_back(a.mult(i));
    if (i != h0) r.m1 = std::max(r.m1, a.mult(i));
  }
  r.total = std::accumulate(mx.begin(), mx.end(), 0);
  const auto loc = localization(a, x);

  // The closed forms are only used over the rationals.
  std::optional<FastPathValue> fast;
  if (opt.use_fast_path && field_traits<F>::characteristic == 0) {
    auto all = euler_fast_path_all(r.k, r.m0, r.m1, r.total, mx);
    if (opt.check_all_cases)
      for (const auto& v : all)
        if (v.value != all.front().value)
          throw std::logic_error("euler: " + to_string(v.method) + " disagrees with " + to_string(all.front().method));
    if (!all.empty()) fast = all.front();
  }
  if (fast) {
    r.value = fast->value;
    r.method = fast->method;
  } else {
    r.value = euler_fallback(loc);
    r.method = EulerMethod::fallback;
  }
  if (opt.cross_check) {
    const int fb = fast ? euler_fallback(loc) : r.value;
    const int split = theta_psi_split(loc.arrangement, loc.host).e;
    if (fb != r.value || split != r.value) throw std::logic_error("euler: cross-check failed");
  }
  return r;
}

template <Field F>
struct EulerRestriction {
  RestrictedArrangement<F> restriction;  // multiplicities are m*
  std::vector<EulerReport> reports;      // reports[i] describes hyperplane i of the restriction
  int total_star = 0;                    // |m*|
};

template <Field F>
EulerRestriction<F> euler_restriction(const Multiarrangement<F>& a, std::size_t h0, const EulerOptions& opt = {}) {
  auto res = restrict_to(a, h0);
  std::vector<EulerReport> reports;
  std::vector<int> star;
  for (const auto& x : res.flats) {
    reports.push_back(euler_multiplicity(a, h0, x, opt));
    star.push_back(reports.back().value);
  }
  res.arrangement = res.arrangement.with_multiplicities(star);
  const int total = std::accumulate(star.begin(), star.end(), 0);
  return EulerRestriction<F>{std::move(res), std::move(reports), total};
}

/// d_X = |m_X| - m*(X), the degree of psi_X.
inline int psi_degree(const EulerReport& r) { return r.total - r.value; }

/// Representative H_X: first hyperplane of A_X other than H0.
inline std::size_t representative(const Flat2& x) { return x.others().front(); }

/// B = alpha0^{m0-1} * prod_X alpha_{H_X}^{d_X - m0}.
template <Field F>
HPoly<F> b_polynomial(const Multiarrangement<F>& a, std::size_t h0, const EulerRestriction<F>& er) {
  const int m0 = a.mult(h0);
  HPoly<F> b = HPoly<F>::linear(a.alpha(h0)).pow(static_cast<unsigned>(m0 - 1));
  for (const auto& r : er.reports) {
    const int ex = psi_degree(r) - m0;
    if (ex < 0) throw std::logic_error("b_polynomial: d_X < m0");
    b = b * HPoly<F>::linear(a.alpha(representative(r.flat))).pow(static_cast<unsigned>(ex));
  }
  return b;
}

template <Field F>
HPoly<F> b_polynomial(const Multiarrangement<F>& a, std::size_t h0) {
  return b_polynomial(a, h0, euler_restriction(a, h0));
}

/// theta(alpha0) in the ideal (alpha0^{m0}, B) for theta in D(A',m').
/// Checks alpha0^{m0-1} | theta(alpha0), then divisibility on H0 by the
/// restricted representative powers.
template <Field F>
bool in_b_ideal(const Multiarrangement<F>& a, std::size_t h0, const EulerRestriction<F>& er, const Derivation<F>& theta) {
  const int m0 = a.mult(h0);
  const auto alpha0 = a.alpha(h0);
  auto q = hpoly_divide_by_form(theta.apply(alpha0), alpha0, static_cast<unsigned>(m0 - 1));
  if (!q) return false;
  const auto& chart = er.restriction.chart;
  const HPoly<F> restricted = substitute(*q, chart.template coordinate_images<F>());
  if (restricted.is_zero()) return true;
  for (const auto& r : er.reports) {
    const int ex = psi_degree(r) - m0;
    if (ex <= 0) continue;
    const auto form = chart.restrict_form(a.form(representative(r.flat)));
    std::vector<F> f;
    for (const auto& c : form) f.push_back(field_traits<F>::from_integer(c));
    if (!divisible_by_form_power(restricted, f, static_cast<unsigned>(ex))) return false;
  }
  return true;
}

}  // namespace multiarr
