#pragma once

// Dense exact linear algebra over a field: reduced row echelon form, canonical
// kernel bases, and an incremental echelon basis for span-membership tests.

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "multiarr/field.hpp"

namespace multiarr {

template <Field F>
using Vec = std::vector<F>;

template <Field F>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, F(0)) {}

  static Matrix from_rows(const std::vector<Vec<F>>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != cols) throw std::invalid_argument("Matrix: ragged rows");
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  F& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const F& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vec<F> row(std::size_t r) const { return Vec<F>(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_); }

  void append_row(const Vec<F>& v) {
    if (v.size() != cols_) throw std::invalid_argument("Matrix: row length mismatch");
    data_.insert(data_.end(), v.begin(), v.end());
    ++rows_;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

  Vec<F> apply(const Vec<F>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("Matrix: vector length mismatch");
    Vec<F> out(rows_, F(0));
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c)
        if (!is_zero((*this)(r, c)) && !is_zero(v[c])) out[r] += (*this)(r, c) * v[c];
    return out;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<F> data_;
};

template <Field F>
struct Echelon {
  Matrix<F> reduced;                 // rank rows, RREF, pivots normalized to 1
  std::vector<std::size_t> pivots;   // pivot column of each row
  std::size_t rank() const { return pivots.size(); }
};

/// Gauss-Jordan reduction. Row operations only touch the nonzero entries of
/// the pivot row, which keeps the sparse constraint systems cheap.
template <Field F>
Echelon<F> rref(Matrix<F> m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::size_t> pivots;
  std::vector<std::size_t> nz;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && is_zero(m(p, c))) ++p;
    if (p == rows) continue;
    m.swap_rows(r, p);
    const F inv = F(1) / m(r, c);
    nz.clear();
    for (std::size_t j = c; j < cols; ++j)
      if (!is_zero(m(r, j))) {
        m(r, j) *= inv;
        nz.push_back(j);
      }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      const F f = m(i, c);
      for (std::size_t j : nz) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  Matrix<F> reduced(pivots.size(), cols);
  for (std::size_t i = 0; i < pivots.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) reduced(i, j) = m(i, j);
  return {std::move(reduced), std::move(pivots)};
}

template <Field F>
std::size_t rank(const Matrix<F>& m) {
  return rref(m).rank();
}

/// Kernel basis read off an echelon form: one vector per free column, in
/// increasing column order, with a 1 in that column and 0 in the other free
/// columns.
template <Field F>
std::vector<Vec<F>> kernel_from_echelon(const Echelon<F>& e, std::size_t cols) {
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t p : e.pivots) is_pivot[p] = true;
  std::vector<Vec<F>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vec<F> v(cols, F(0));
    v[f] = F(1);
    for (std::size_t i = 0; i < e.pivots.size(); ++i) {
      const F& a = e.reduced(i, f);
      if (!is_zero(a)) v[e.pivots[i]] = -a;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

template <Field F>
std::vector<Vec<F>> kernel_basis(const Matrix<F>& m) {
  return kernel_from_echelon(rref(m), m.cols());
}

/// Incrementally maintained echelon basis of a subspace of F^n.
template <Field F>
class EchelonSpan {
 public:
  explicit EchelonSpan(std::size_t n) : n_(n) {}

  std::size_t dimension() const { return rows_.size(); }
  std::size_t ambient() const { return n_; }

  /// Reduce v against the basis; returns the residual.
  Vec<F> reduce(Vec<F> v) const {
    if (v.size() != n_) throw std::invalid_argument("EchelonSpan: length mismatch");
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const std::size_t p = pivots_[i];
      if (is_zero(v[p])) continue;
      const F f = v[p];
      for (std::size_t j : support_[i]) v[j] -= f * rows_[i][j];
    }
    return v;
  }

  bool contains(const Vec<F>& v) const {
    auto r = reduce(v);
    for (const auto& x : r)
      if (!is_zero(x)) return false;
    return true;
  }

  /// Adds v; true when it enlarged the span.
  bool insert(const Vec<F>& v) {
    Vec<F> r = reduce(v);
    std::size_t p = 0;
    while (p < n_ && is_zero(r[p])) ++p;
    if (p == n_) return false;
    const F inv = F(1) / r[p];
    std::vector<std::size_t> supp;
    for (std::size_t j = 0; j < n_; ++j)
      if (!is_zero(r[j])) {
        r[j] *= inv;
        supp.push_back(j);
      }
    rows_.push_back(std::move(r));
    pivots_.push_back(p);
    support_.push_back(std::move(supp));
    return true;
  }

 private:
  std::size_t n_;
  std::vector<Vec<F>> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<std::vector<std::size_t>> support_;
};

}  // namespace multiarr
