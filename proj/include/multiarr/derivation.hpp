#pragma once

// Homogeneous derivations and the graded pieces D(A,m)_d.
//
// D(A,m)_d is the kernel of a linear system. Unknowns are the coefficients
// of the l components (component-major, monomials in graded-lex order). For
// each hyperplane H the variable x_p (p = first nonzero entry of alpha_H) is
// replaced by y_p = alpha_H(x); theta(alpha_H) is divisible by
// alpha_H^m(H) exactly when its coefficients on y_p^0 .. y_p^{m(H)-1} vanish.

#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "multiarr/arrangement.hpp"
#include "multiarr/hpoly.hpp"
#include "multiarr/linalg.hpp"
#include "multiarr/poly_det.hpp"

namespace multiarr {

template <Field F>
class Derivation {
 public:
  Derivation(std::size_t dim, int degree) : degree_(degree) {
    comps_.reserve(dim);
    for (std::size_t i = 0; i < dim; ++i) comps_.emplace_back(dim, degree);
  }

  explicit Derivation(std::vector<HPoly<F>> comps) : comps_(std::move(comps)) {
    if (comps_.empty()) throw std::invalid_argument("Derivation: no components");
    degree_ = -1;
    for (const auto& c : comps_) {
      if (c.dim() != comps_.size()) throw std::invalid_argument("Derivation: component dimension mismatch");
      if (c.is_zero()) continue;
      if (degree_ >= 0 && c.degree() != degree_) throw std::invalid_argument("Derivation: components not homogeneous");
      degree_ = c.degree();
    }
    if (degree_ < 0) degree_ = comps_.front().degree();
  }

  /// x^e * d/dx_i
  static Derivation monomial_field(std::size_t i, const Exponent& e, const F& c = F(1)) {
    Derivation d(e.size(), total_degree(e));
    d.comps_.at(i).add_term(e, c);
    return d;
  }

  std::size_t dim() const { return comps_.size(); }
  int degree() const { return degree_; }
  const HPoly<F>& component(std::size_t i) const { return comps_.at(i); }
  const std::vector<HPoly<F>>& components() const { return comps_; }

  bool is_zero() const {
    for (const auto& c : comps_)
      if (!c.is_zero()) return false;
    return true;
  }

  /// theta(alpha) for a linear form alpha.
  HPoly<F> apply(const std::vector<F>& alpha) const {
    if (alpha.size() != dim()) throw std::invalid_argument("Derivation::apply: dimension mismatch");
    HPoly<F> out(dim(), degree_);
    for (std::size_t i = 0; i < dim(); ++i)
      if (!multiarr::is_zero(alpha[i])) out.accumulate(comps_[i], alpha[i]);
    return out;
  }

  Derivation& operator+=(const Derivation& o) {
    if (is_zero()) degree_ = o.degree_;
    for (std::size_t i = 0; i < dim(); ++i) comps_[i] += o.comps_[i];
    return *this;
  }
  Derivation& operator*=(const F& c) {
    for (auto& p : comps_) p *= c;
    return *this;
  }
  friend Derivation operator+(Derivation a, const Derivation& b) { return a += b; }
  friend Derivation operator-(Derivation a, const Derivation& b) { return a += (b * F(-1)); }
  friend Derivation operator*(Derivation a, const F& c) { return a *= c; }

  friend Derivation operator*(const HPoly<F>& f, const Derivation& d) {
    std::vector<HPoly<F>> comps;
    for (const auto& c : d.comps_) comps.push_back(f * c);
    Derivation out(std::move(comps));
    out.degree_ = f.degree() + d.degree_;
    return out;
  }

  friend bool operator==(const Derivation& a, const Derivation& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero() && a.dim() == b.dim();
    return a.degree_ == b.degree_ && a.comps_ == b.comps_;
  }

  /// Coefficient vector in the graded-piece coordinates.
  Vec<F> to_vector() const {
    const std::size_t n = count_monomials(dim(), degree_);
    Vec<F> v(dim() * n, F(0));
    for (std::size_t i = 0; i < dim(); ++i)
      for (const auto& [e, c] : comps_[i].terms()) v[i * n + monomial_index(e)] = c;
    return v;
  }

  static Derivation from_vector(std::size_t dim, int degree, const Vec<F>& v) {
    const auto mons = monomials(dim, degree);
    if (v.size() != dim * mons.size()) throw std::invalid_argument("Derivation::from_vector: length mismatch");
    Derivation d(dim, degree);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t k = 0; k < mons.size(); ++k) d.comps_[i].add_term(mons[k], v[i * mons.size() + k]);
    return d;
  }

  std::string to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < dim(); ++i) {
      if (comps_[i].is_zero()) continue;
      if (!first) os << " + ";
      os << '(' << comps_[i].to_string() << ")*d" << (i + 1);
      first = false;
    }
    return first ? "0" : os.str();
  }

 private:
  std::vector<HPoly<F>> comps_;
  int degree_ = 0;
};

/// Coefficient matrix M(theta_1..theta_l), entry (i,j) = theta_j(x_i).
template <Field F>
PolyMatrix<F> coefficient_matrix(const std::vector<Derivation<F>>& thetas) {
  if (thetas.empty()) throw std::invalid_argument("coefficient_matrix: no derivations");
  const std::size_t n = thetas.front().dim();
  if (thetas.size() != n) throw std::invalid_argument("coefficient_matrix: need exactly dim derivations");
  PolyMatrix<F> m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i].push_back(thetas[j].component(i));
  return m;
}

template <Field F>
HPoly<F> saito_determinant(const std::vector<Derivation<F>>& thetas) {
  return poly_matrix_det(coefficient_matrix(thetas));
}

/// Index of the first hyperplane whose divisibility condition fails, or
/// nullopt when theta lies in D(A,m). Uses exact polynomial division, not
/// the constraint system.
template <Field F>
std::optional<std::size_t> membership_failure(const Multiarrangement<F>& a, const Derivation<F>& theta) {
  if (theta.dim() != a.dim()) throw std::invalid_argument("membership: dimension mismatch");
  for (std::size_t h = 0; h < a.size(); ++h) {
    auto alpha = a.alpha(h);
    if (!divisible_by_form_power(theta.apply(alpha), alpha, static_cast<unsigned>(a.mult(h)))) return h;
  }
  return std::nullopt;
}

template <Field F>
bool is_member(const Multiarrangement<F>& a, const Derivation<F>& theta) {
  return !membership_failure(a, theta).has_value();
}

/// Linear constraints cutting D(A,m)_d out of Der_d.
template <Field F>
Matrix<F> constraint_matrix(const Multiarrangement<F>& a, int d) {
  const std::size_t n = a.dim();
  const auto mons = monomials(n, d);
  const std::size_t nm = mons.size();
  Matrix<F> m(0, n * nm);
  for (std::size_t h = 0; h < a.size(); ++h) {
    const auto alpha = a.alpha(h);
    const int k = a.mult(h);
    const std::size_t p = detail::leading_index(alpha);
    const F ap_inv = F(1) / alpha[p];
    // (-L)^t where alpha = a_p x_p + L
    std::vector<F> neg_l(n, F(0));
    for (std::size_t i = 0; i < n; ++i)
      if (i != p) neg_l[i] = -alpha[i];
    std::vector<HPoly<F>> neg_pow{HPoly<F>::constant(n, F(1))};
    const HPoly<F> neg_lin = HPoly<F>::linear(neg_l);
    for (int t = 1; t <= d; ++t) neg_pow.push_back(neg_pow.back() * neg_lin);
    std::vector<F> ap_inv_pow{F(1)};
    for (int t = 1; t <= d; ++t) ap_inv_pow.push_back(ap_inv_pow.back() * ap_inv);

    // rows: monomials in y with y_p-degree < k; entries: image coefficients.
    std::map<Exponent, std::map<std::size_t, F>> image;
    for (std::size_t col = 0; col < nm; ++col) {
      const Exponent& e = mons[col];
      const int ep = e[p];
      Exponent base = e;
      base[p] = 0;
      for (int j = 0; j < k && j <= ep; ++j) {
        const F coef = binomial<F>(static_cast<unsigned>(ep), static_cast<unsigned>(j)) * ap_inv_pow[ep];
        for (const auto& [t, c] : neg_pow[ep - j].terms()) {
          Exponent y = base;
          for (std::size_t i = 0; i < n; ++i) y[i] += t[i];
          y[p] = j;
          F& slot = image[y][col];
          slot += coef * c;
        }
      }
    }
    for (const auto& [y, entries] : image) {
      Vec<F> row(n * nm, F(0));
      bool any = false;
      for (std::size_t i = 0; i < n; ++i) {
        if (multiarr::is_zero(alpha[i])) continue;
        for (const auto& [col, v] : entries) {
          if (multiarr::is_zero(v)) continue;
          row[i * nm + col] = alpha[i] * v;
          any = true;
        }
      }
      if (any) m.append_row(row);
    }
  }
  return m;
}

/// Canonical basis of D(A,m)_d together with the data needed to
/// re-express elements.
template <Field F>
struct GradedPiece {
  int degree = 0;
  std::size_t dim = 0;
  std::vector<Vec<F>> vectors;  // canonical kernel basis
  std::vector<Derivation<F>> basis;

  std::size_t dimension() const { return vectors.size(); }
};

template <Field F>
GradedPiece<F> graded_piece(const Multiarrangement<F>& a, int d) {
  if (d < 0) throw std::invalid_argument("graded_piece: negative degree");
  GradedPiece<F> g;
  g.degree = d;
  g.dim = a.dim();
  g.vectors = kernel_basis(constraint_matrix(a, d));
  for (const auto& v : g.vectors) g.basis.push_back(Derivation<F>::from_vector(a.dim(), d, v));
  return g;
}

template <Field F>
std::size_t graded_dimension(const Multiarrangement<F>& a, int d) {
  if (d < 0) throw std::invalid_argument("graded_dimension: negative degree");
  auto m = constraint_matrix(a, d);
  return m.cols() - rank(m);
}

template <Field F>
std::vector<Derivation<F>> graded_basis(const Multiarrangement<F>& a, int d) {
  return graded_piece(a, d).basis;
}

/// Image of theta in Der(S/alpha0 S), expressed in the chart coordinates of
/// H0: component i (i != pivot) is theta(x_i)|_{H0} / a_pivot.
template <Field F>
Derivation<F> restrict_derivation(const HyperplaneChart& chart, const Derivation<F>& theta) {
  const auto images = chart.coordinate_images<F>();
  const F ap_inv = F(1) / field_traits<F>::from_integer(chart.host.coeffs[chart.pivot]);
  std::vector<HPoly<F>> comps;
  for (std::size_t i = 0; i < theta.dim(); ++i) {
    if (i == chart.pivot) continue;
    comps.push_back(substitute(theta.component(i), images) * ap_inv);
  }
  Derivation<F> out(std::move(comps));
  return out;
}

/// Lifts a derivation of the essentialized arrangement back to the ambient
/// space: the component at pivot column p_i is f_i evaluated at the rows.
template <Field F>
Derivation<F> pull_back(const Essentialization<F>& e, const Derivation<F>& theta, std::size_t ambient_dim) {
  if (theta.dim() != e.rows.size()) throw std::invalid_argument("pull_back: dimension mismatch");
  std::vector<HPoly<F>> images;
  for (const auto& r : e.rows) images.push_back(HPoly<F>::linear(r));
  std::vector<HPoly<F>> comps;
  for (std::size_t j = 0; j < ambient_dim; ++j) comps.emplace_back(ambient_dim, theta.degree());
  for (std::size_t i = 0; i < e.rows.size(); ++i) comps[e.pivots[i]] = substitute(theta.component(i), images);
  return Derivation<F>(std::move(comps));
}

}  // namespace multiarr
