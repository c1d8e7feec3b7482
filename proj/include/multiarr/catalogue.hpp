#pragma once

// Named arrangements used by the tests, the acceptance run and the CLI.

#include <algorithm>
#include <array>
#include <cstddef>
#include <vector>

#include "multiarr/arrangement.hpp"
#include "multiarr/derivation.hpp"

namespace multiarr::catalogue {

/// Reflection arrangement of type A3, listed as
/// x1, x1-x3, x1-x2, x2, x2-x3, x3. Multiplicity vectors below use this
/// listing order; the normalized arrangement sorts its hyperplanes.
inline std::vector<std::vector<long>> a3_forms() {
  return {{1, 0, 0}, {1, 0, -1}, {1, -1, 0}, {0, 1, 0}, {0, 1, -1}, {0, 0, 1}};
}

template <Field F = Rational>
Multiarrangement<F> a3(const std::vector<int>& m = std::vector<int>(6, 1)) {
  return Multiarrangement<F>::normalize(3, a3_forms(), m);
}

/// Index in the normalized arrangement of listing position i.
template <Field F>
std::size_t a3_index(const Multiarrangement<F>& a, std::size_t i) {
  const auto f = a3_forms().at(i);
  return a.index_of(std::vector<Integer>(f.begin(), f.end()));
}

/// {x1} < {x1, x2, x1-x2} < A3
template <Field F>
std::vector<std::vector<std::size_t>> a3_filtration(const Multiarrangement<F>& a) {
  std::vector<std::size_t> all(a.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return {{a3_index(a, 0)}, {a3_index(a, 0), a3_index(a, 2), a3_index(a, 3)}, all};
}

/// Closed-form hypotheses and exponents for A3 multiplicities (listing order).
inline bool a3_closed_form_applies(const std::vector<int>& m) {
  return m[0] >= std::max(m[2], m[3]) && m[0] >= m[1] + m[5] - 1 && m[3] >= m[4] + m[5] - 1 &&
         m[2] >= m[1] + m[4] - 1;
}

inline std::vector<int> a3_closed_form_exponents(const std::vector<int>& m) {
  std::vector<int> e;
  const int s = m[0] + m[2] + m[3];
  if (m[0] <= m[2] + m[3] - 1)
    e = {s / 2, (s + 1) / 2, m[1] + m[4] + m[5]};
  else
    e = {m[0], m[2] + m[3], m[1] + m[4] + m[5]};
  std::sort(e.begin(), e.end());
  return e;
}

/// Coordinate hyperplanes x1..xl.
template <Field F = Rational>
Multiarrangement<F> boolean(std::size_t l, std::vector<int> m = {}) {
  if (m.empty()) m.assign(l, 1);
  std::vector<std::vector<long>> forms;
  for (std::size_t i = 0; i < l; ++i) {
    std::vector<long> f(l, 0);
    f[i] = 1;
    forms.push_back(f);
  }
  return Multiarrangement<F>::normalize(l, forms, m);
}

/// x1, x2, x3, x1+x2+x3 (listing order).
inline std::vector<std::vector<long>> generic4_forms() { return {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}}; }

template <Field F = Rational>
Multiarrangement<F> generic4(const std::vector<int>& m = {1, 1, 1, 1}) {
  return Multiarrangement<F>::normalize(3, generic4_forms(), m);
}

/// Plane pencil x1^4 x2^3 (x1 - x2) (x1 - xi x2), xi not 0 or 1.
inline Multiarrangement<Rational> pencil(const Rational& xi) {
  const Integer p = xi.get_num(), q = xi.get_den();
  return Multiarrangement<Rational>::normalize(
      2, {{{Integer(1), Integer(0)}, 4}, {{Integer(0), Integer(1)}, 3}, {{Integer(1), Integer(-1)}, 1}, {{q, -p}, 1}});
}

/// theta1 = x1^4 d1 + [(1 + xi(1 + xi)) x1 x2^3 - xi(1 + xi) x2^4] d2
/// theta2 = x2^3 (x1 - x2)(x1 - xi x2) d2
inline std::array<Derivation<Rational>, 2> pencil_basis(const Rational& xi) {
  using P = HPoly<Rational>;
  P f1 = P::monomial({4, 0});
  P g1(2, 4);
  g1.add_term({1, 3}, Rational(1 + xi * (1 + xi)));
  g1.add_term({0, 4}, Rational(-xi * (1 + xi)));
  P g2 = P::monomial({0, 3}) * P::linear({Rational(1), Rational(-1)}) * P::linear({Rational(1), Rational(-xi)});
  return {Derivation<Rational>({f1, g1}), Derivation<Rational>({P(2, 5), g2})};
}

}  // namespace multiarr::catalogue
