#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "multiarr/hpoly.hpp"

namespace multiarr {

template <Field F>
using PolyMatrix = std::vector<std::vector<HPoly<F>>>;  // row-major, square

/// Determinant by Laplace expansion along successive rows, memoized over
/// column subsets (2^n minors instead of n!).
template <Field F>
HPoly<F> poly_matrix_det(const PolyMatrix<F>& m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("poly_matrix_det: matrix is not square");
  if (n == 0) throw std::invalid_argument("poly_matrix_det: empty matrix");
  if (n > 20) throw std::invalid_argument("poly_matrix_det: matrix too large");
  const std::size_t dim = m[0][0].dim();

  // minors[S]: determinant of rows 0..|S|-1 restricted to the columns in S.
  std::vector<std::optional<HPoly<F>>> minors(std::size_t{1} << n);
  minors[0] = HPoly<F>::constant(dim, F(1));
  for (std::uint32_t s = 1; s < (1u << n); ++s) {
    const std::size_t k = static_cast<std::size_t>(__builtin_popcount(s));
    const auto& row = m[k - 1];
    std::optional<HPoly<F>> acc;
    for (std::size_t j = 0; j < n; ++j) {
      if (!(s & (1u << j))) continue;
      const std::uint32_t rest = s & ~(1u << j);
      const auto& sub = *minors[rest];
      if (row[j].is_zero() || sub.is_zero()) continue;
      // sign = (-1)^(number of columns in S to the right of j)
      const int above = __builtin_popcount(s >> (j + 1));
      HPoly<F> term = row[j] * sub;
      if (above % 2) term *= F(-1);
      if (!acc)
        acc = std::move(term);
      else
        *acc += term;
    }
    if (!acc) {
      int deg = 0;
      acc = HPoly<F>(dim, deg);
    }
    minors[s] = std::move(acc);
  }
  return *minors[(1u << n) - 1];
}

/// Nonzero c with p == c * q, when it exists.
template <Field F>
std::optional<F> proportionality_scalar(const HPoly<F>& p, const HPoly<F>& q) {
  if (q.is_zero() || p.is_zero()) return std::nullopt;
  if (p.degree() != q.degree() || p.size() != q.size()) return std::nullopt;
  const auto& [e0, c0] = *q.terms().begin();
  F c = p.coefficient(e0) / c0;
  if (is_zero(c)) return std::nullopt;
  for (const auto& [e, v] : q.terms())
    if (!(p.coefficient(e) == c * v)) return std::nullopt;
  return c;
}

}  // namespace multiarr
