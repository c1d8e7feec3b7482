#pragma once

// Rank-2 multiarrangements: exponents, Saito bases, and the theta/psi split
// of a localization with respect to a chosen hyperplane.

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "multiarr/arrangement.hpp"
#include "multiarr/derivation.hpp"

namespace multiarr {

namespace detail {

template <Field F>
void require_plane(const Multiarrangement<F>& a, const char* what) {
  if (a.dim() != 2) throw ArrangementError(std::string(what) + ": arrangement must be 2-dimensional");
  if (a.empty()) throw ArrangementError(std::string(what) + ": arrangement is empty");
}

template <Field F>
bool divisible_componentwise(const Derivation<F>& d, const std::vector<F>& alpha) {
  for (const auto& c : d.components())
    if (!divisible_by_form_power(c, alpha, 1)) return false;
  return true;
}

/// Basis vectors first, then b_i + t*b_j for t in {1,-1,2}.
template <Field F>
std::vector<Derivation<F>> candidates(const std::vector<Derivation<F>>& basis) {
  std::vector<Derivation<F>> out = basis;
  for (const long t : {1L, -1L, 2L})
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = 0; j < basis.size(); ++j)
        if (i != j) out.push_back(basis[i] + basis[j] * from_int<F>(t));
  return out;
}

}  // namespace detail

template <Field F>
struct Rank2Basis {
  std::array<Derivation<F>, 2> basis;
  std::array<int, 2> exponents;
  F scalar;  // det M(theta1, theta2) = scalar * Q
};

template <Field F>
std::array<int, 2> rank2_exponents(const Multiarrangement<F>& a) {
  detail::require_plane(a, "rank2_exponents");
  const int total = a.total();
  for (int d = 0; d <= total; ++d)
    if (graded_dimension(a, d) > 0) return {d, total - d};
  throw std::logic_error("rank2_exponents: no derivation up to degree |m|");
}

template <Field F>
Rank2Basis<F> rank2_basis(const Multiarrangement<F>& a) {
  const auto exps = rank2_exponents(a);
  const HPoly<F> q = defining_polynomial(a);
  Derivation<F> theta1 = graded_basis(a, exps[0]).front();
  for (const auto& theta2 : graded_basis(a, exps[1])) {
    auto det = saito_determinant(std::vector<Derivation<F>>{theta1, theta2});
    if (det.is_zero()) continue;
    auto c = proportionality_scalar(det, q);
    if (!c) throw std::logic_error("rank2_basis: determinant not proportional to Q");
    return Rank2Basis<F>{{theta1, theta2}, exps, *c};
  }
  throw std::logic_error("rank2_basis: no independent partner found");
}

/// Free basis of an arrangement of rank at most 2 in its ambient space: the
/// essential part's basis pulled back, plus d/dx_j for every non-pivot j.
template <Field F>
struct SmallRankBasis {
  std::vector<Derivation<F>> basis;
  std::vector<int> exponents;  // sorted
};

template <Field F>
SmallRankBasis<F> small_rank_basis(const Multiarrangement<F>& a) {
  const std::size_t n = a.dim();
  SmallRankBasis<F> out;
  auto e = essentialize(a);
  const std::size_t r = e.rows.size();
  if (r > 2) throw ArrangementError("small_rank_basis: rank exceeds 2");
  if (r == 1) {
    Exponent ex{e.arrangement.mult(0)};
    out.basis.push_back(pull_back(e, Derivation<F>::monomial_field(0, ex), n));
  } else if (r == 2) {
    auto b = rank2_basis(e.arrangement);
    for (const auto& t : b.basis) out.basis.push_back(pull_back(e, t, n));
  }
  // Constant fields along the common kernel of the forms.
  for (const auto& v : kernel_basis(form_matrix<F>(a.forms(), n))) out.basis.push_back(Derivation<F>::from_vector(n, 0, v));
  for (const auto& t : out.basis) out.exponents.push_back(t.degree());
  std::sort(out.exponents.begin(), out.exponents.end());
  return out;
}

template <Field F>
struct ThetaPsiSplit {
  Derivation<F> theta;     // not divisible by alpha0
  Derivation<F> psi;       // every component divisible by alpha0
  int e = 0;               // deg theta
  int d = 0;               // deg psi
  Derivation<F> theta_ambient;
  Derivation<F> psi_ambient;
};

/// Split of D(A_X, m_X) for a localization at a codimension-2 flat; `host`
/// indexes H0 inside `ax`. Works on the essentialized plane arrangement.
template <Field F>
ThetaPsiSplit<F> theta_psi_split(const Multiarrangement<F>& ax, std::size_t host) {
  if (host >= ax.size()) throw ArrangementError("theta_psi_split: host not in arrangement");
  const auto e = essentialize_2d(ax);
  const auto& a2 = e.arrangement;
  const std::size_t h2 = e.target[host];
  const auto alpha0 = a2.alpha(h2);
  const auto exps = rank2_exponents(a2);
  const auto a2del = deletion(a2, h2);
  const int total = a2.total();
  const HPoly<F> lin0 = HPoly<F>::linear(alpha0);

  std::vector<int> psi_degrees{exps[0]};
  if (exps[1] != exps[0]) psi_degrees.push_back(exps[1]);
  for (int dx : psi_degrees) {
    if (dx < 1) continue;
    std::vector<Derivation<F>> w;
    for (const auto& eta : graded_basis(a2del, dx - 1)) w.push_back(lin0 * eta);
    if (w.empty()) continue;
    std::vector<Derivation<F>> thetas;
    for (auto& t : detail::candidates(graded_basis(a2, total - dx)))
      if (!detail::divisible_componentwise(t, alpha0)) thetas.push_back(std::move(t));
    const auto psis = detail::candidates(w);
    for (const auto& theta : thetas)
      for (const auto& psi : psis) {
        if (psi.is_zero()) continue;
        if (saito_determinant(std::vector<Derivation<F>>{theta, psi}).is_zero()) continue;
        return ThetaPsiSplit<F>{theta, psi, total - dx, dx, pull_back(e, theta, ax.dim()),
                                pull_back(e, psi, ax.dim())};
      }
  }
  throw std::logic_error("theta_psi_split: no split found");
}

}  // namespace multiarr
