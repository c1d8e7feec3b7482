#pragma once

// Freeness decisions with checkable certificates.
//
// decide_freeness scans degrees upward. Two tests run side by side:
//  * Hilbert test: a free module with exponents d_1..d_l has
//    dim D_d = sum_i C(d - d_i + l - 1, l - 1). The dimensions seen so far
//    determine the only exponents that could fit; contradictions are
//    reported with the observed dimensions as witness.
//  * Minimal generators: basis elements of D_d outside the span of monomial
//    multiples of earlier generators. More than l of them, or a degree sum
//    above |m|, rules freeness out; l of them with degree sum |m| and
//    determinant c*Q is a Saito basis.

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "multiarr/arrangement.hpp"
#include "multiarr/derivation.hpp"
#include "multiarr/euler.hpp"
#include "multiarr/rank2.hpp"

namespace multiarr {

enum class Verdict { free, not_free, unknown };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::free: return "free";
    case Verdict::not_free: return "not_free";
    case Verdict::unknown: return "unknown";
  }
  return "?";
}

/// dims[d] = dim D(A,m)_d for d = 0..degree; no exponent multiset fits.
struct HilbertMismatch {
  int degree = 0;
  std::vector<std::size_t> dims;
};

/// Minimal generator counts per degree exceed what a free module allows.
/// dims[d] = dim D_d, spans[d] = dim (S_1 * D_{d-1}) (spans[0] = 0).
struct GeneratorOverflow {
  std::vector<int> degrees;  // degrees of the minimal generators found, ascending
  std::vector<std::size_t> dims;
  std::vector<std::size_t> spans;
};

using Witness = std::variant<std::monostate, HilbertMismatch, GeneratorOverflow>;

template <Field F>
struct FreenessCertificate {
  Multiarrangement<F> arrangement;
  Verdict verdict = Verdict::unknown;
  std::vector<Derivation<F>> basis{};  // empty for inferred certificates
  std::vector<int> exponents{};      // sorted
  std::optional<F> scalar{};           // det M(basis) = scalar * Q
  Witness witness{};
  int degree_bound = 0;
  std::vector<std::size_t> dims{};   // dimensions observed during the scan
  std::string origin = "search";

  bool is_free() const { return verdict == Verdict::free; }
};

/// Thrown by saito_check when a candidate is not in D(A,m).
class NotInModule : public std::invalid_argument {
 public:
  NotInModule(std::size_t candidate, std::size_t hyperplane)
      : std::invalid_argument("derivation " + std::to_string(candidate) + " fails divisibility on hyperplane " +
                              std::to_string(hyperplane)),
        candidate(candidate),
        hyperplane(hyperplane) {}
  std::size_t candidate;
  std::size_t hyperplane;
};

template <Field F>
struct SaitoResult {
  F scalar;
  std::vector<int> exponents;
};

template <Field F>
std::optional<SaitoResult<F>> saito_check(const Multiarrangement<F>& a, const std::vector<Derivation<F>>& basis) {
  if (basis.size() != a.dim()) throw std::invalid_argument("saito_check: need exactly dim derivations");
  for (std::size_t j = 0; j < basis.size(); ++j) {
    if (basis[j].dim() != a.dim()) throw std::invalid_argument("saito_check: dimension mismatch");
    if (auto h = membership_failure(a, basis[j])) throw NotInModule(j, *h);
  }
  auto det = saito_determinant(basis);
  auto c = proportionality_scalar(det, defining_polynomial(a));
  if (!c) return std::nullopt;
  std::vector<int> exps;
  for (const auto& t : basis) exps.push_back(t.degree());
  std::sort(exps.begin(), exps.end());
  return SaitoResult<F>{*c, exps};
}

/// sum_i C(d - d_i + l - 1, l - 1)
inline std::size_t hilbert_value(const std::vector<int>& exps, std::size_t l, int d) {
  std::size_t s = 0;
  for (int e : exps) s += count_monomials(l, d - e);
  return s;
}

namespace detail {

/// Degree of the first Hilbert contradiction in dims[0..], or nullopt.
/// The exponents that dims[0..d] force are read off one degree at a time.
inline std::optional<int> hilbert_contradiction(const std::vector<std::size_t>& dims, std::size_t l, int total) {
  std::vector<int> found;
  int sum = 0;
  for (int d = 0; d < static_cast<int>(dims.size()); ++d) {
    const long long expected = static_cast<long long>(hilbert_value(found, l, d));
    const long long c = static_cast<long long>(dims[d]) - expected;
    if (c < 0) return d;
    for (long long i = 0; i < c; ++i) found.push_back(d);
    sum += static_cast<int>(c) * d;
    const long long n = static_cast<long long>(found.size());
    const long long ll = static_cast<long long>(l);
    if (n > ll) return d;
    if (n == ll && sum != total) return d;
    if (n < ll && static_cast<long long>(total - sum) < (ll - n) * (d + 1)) return d;
  }
  return std::nullopt;
}

}  // namespace detail

struct DecideOptions {
  int degree_bound = -1;  // -1: |m|
};

template <Field F>
FreenessCertificate<F> decide_freeness(const Multiarrangement<F>& a, const DecideOptions& opt = {}) {
  const std::size_t l = a.dim();
  const int total = a.total();
  const int bound = opt.degree_bound < 0 ? total : opt.degree_bound;
  FreenessCertificate<F> cert{.arrangement = a};
  cert.degree_bound = bound;
  const HPoly<F> q = defining_polynomial(a);

  std::vector<Derivation<F>> gens;
  std::vector<std::size_t> spans;
  int gen_sum = 0;
  for (int d = 0; d <= bound; ++d) {
    const auto piece = graded_piece(a, d);
    cert.dims.push_back(piece.dimension());

    if (auto bad = detail::hilbert_contradiction(cert.dims, l, total)) {
      cert.verdict = Verdict::not_free;
      cert.witness = HilbertMismatch{*bad, cert.dims};
      return cert;
    }

    // Span of monomial multiples of generators from lower degrees.
    EchelonSpan<F> span(l * count_monomials(l, d));
    for (const auto& g : gens)
      for (const auto& mono : monomials(l, d - g.degree())) span.insert((HPoly<F>::monomial(mono) * g).to_vector());
    spans.push_back(span.dimension());
    for (std::size_t i = 0; i < piece.basis.size(); ++i) {
      if (!span.insert(piece.vectors[i])) continue;
      gens.push_back(piece.basis[i]);
      gen_sum += d;
    }

    if (gens.size() > l || gen_sum > total) {
      GeneratorOverflow w;
      for (const auto& g : gens) w.degrees.push_back(g.degree());
      w.dims = cert.dims;
      w.spans = spans;
      cert.verdict = Verdict::not_free;
      cert.witness = std::move(w);
      return cert;
    }
    if (gens.size() == l && gen_sum == total) {
      auto c = proportionality_scalar(saito_determinant(gens), q);
      if (c) {
        cert.verdict = Verdict::free;
        cert.basis = gens;
        cert.scalar = *c;
        for (const auto& g : gens) cert.exponents.push_back(g.degree());
        std::sort(cert.exponents.begin(), cert.exponents.end());
        return cert;
      }
    }
  }
  cert.verdict = Verdict::unknown;
  return cert;
}

/// A certificate for exponents obtained without a basis.
template <Field F>
FreenessCertificate<F> inferred_certificate(const Multiarrangement<F>& a, std::vector<int> exps, std::string origin) {
  FreenessCertificate<F> c{.arrangement = a};
  c.verdict = Verdict::free;
  std::sort(exps.begin(), exps.end());
  c.exponents = std::move(exps);
  c.origin = std::move(origin);
  c.degree_bound = a.total();
  return c;
}

/// Multiset big \ small when small is contained in big and one value is left.
inline std::optional<int> leftover(std::vector<int> big, std::vector<int> small) {
  if (big.size() != small.size() + 1) return std::nullopt;
  std::sort(big.begin(), big.end());
  std::sort(small.begin(), small.end());
  std::vector<int> rest;
  std::set_difference(big.begin(), big.end(), small.begin(), small.end(), std::back_inserter(rest));
  if (rest.size() != 1) return std::nullopt;
  return rest.front();
}

/// exps with one occurrence of `from` replaced by `to`, sorted.
inline std::vector<int> replace_one(std::vector<int> exps, int from, int to) {
  auto it = std::find(exps.begin(), exps.end(), from);
  if (it == exps.end()) throw std::invalid_argument("replace_one: value not present");
  *it = to;
  std::sort(exps.begin(), exps.end());
  return exps;
}

template <Field F>
struct TripleRecord {
  Multiarrangement<F> arrangement;
  std::size_t host = 0;
  Multiarrangement<F> deletion;
  EulerRestriction<F> restriction;

  const Multiarrangement<F>& restricted() const { return restriction.restriction.arrangement; }
};

template <Field F>
TripleRecord<F> make_triple(const Multiarrangement<F>& a, std::size_t h0, const EulerOptions& opt = {}) {
  if (a.dim() < 2) throw ArrangementError("make_triple: dimension must be at least 2");
  return TripleRecord<F>{a, h0, deletion(a, h0), euler_restriction(a, h0, opt)};
}

namespace detail {

template <Field F>
FreenessCertificate<F> verified(FreenessCertificate<F> inferred) {
  auto found = decide_freeness(inferred.arrangement);
  if (!found.is_free() || found.exponents != inferred.exponents)
    throw std::logic_error("inference disagrees with the decision procedure for " + inferred.arrangement.to_string());
  found.origin = inferred.origin + "+verified";
  return found;
}

}  // namespace detail

/// Addition: (A',m') and (A'',m*) free with exp(A'') inside exp(A').
template <Field F>
std::optional<FreenessCertificate<F>> addition_inference(const TripleRecord<F>& t, const FreenessCertificate<F>& del,
                                                         const FreenessCertificate<F>& res, bool verify = false) {
  if (!del.is_free() || !res.is_free()) return std::nullopt;
  auto d = leftover(del.exponents, res.exponents);
  if (!d) return std::nullopt;
  auto c = inferred_certificate(t.arrangement, replace_one(del.exponents, *d, *d + 1), "addition");
  return verify ? detail::verified(std::move(c)) : c;
}

/// Deletion: (A,m) and (A'',m*) free with exp(A'') inside exp(A).
template <Field F>
std::optional<FreenessCertificate<F>> deletion_inference(const TripleRecord<F>& t, const FreenessCertificate<F>& full,
                                                         const FreenessCertificate<F>& res, bool verify = false) {
  if (!full.is_free() || !res.is_free()) return std::nullopt;
  auto d = leftover(full.exponents, res.exponents);
  if (!d || *d < 1) return std::nullopt;
  auto c = inferred_certificate(t.deletion, replace_one(full.exponents, *d, *d - 1), "deletion");
  return verify ? detail::verified(std::move(c)) : c;
}

/// Exponents after raising m(H0) to m0 on a free simple arrangement whose
/// exponents contain 1.
template <Field F>
std::vector<int> one_hyperplane_multiplicity(const Multiarrangement<F>& a, std::size_t h0, int m0, bool verify = false) {
  if (!a.is_simple()) throw ArrangementError("one_hyperplane_multiplicity: arrangement is not simple");
  if (m0 < 1) throw ArrangementError("one_hyperplane_multiplicity: multiplicity must be positive");
  if (h0 >= a.size()) throw ArrangementError("one_hyperplane_multiplicity: hyperplane not in arrangement");
  auto cert = decide_freeness(a);
  if (!cert.is_free()) throw ArrangementError("one_hyperplane_multiplicity: arrangement is not certified free");
  if (std::find(cert.exponents.begin(), cert.exponents.end(), 1) == cert.exponents.end())
    throw ArrangementError("one_hyperplane_multiplicity: exponent 1 absent");
  auto exps = replace_one(cert.exponents, 1, m0);
  if (verify) {
    std::vector<int> m(a.size(), 1);
    m[h0] = m0;
    auto check = decide_freeness(a.with_multiplicities(m));
    if (!check.is_free() || check.exponents != exps)
      throw std::logic_error("one_hyperplane_multiplicity: decision procedure disagrees");
  }
  return exps;
}

/// Supersolvable filtration A_1 < ... < A_r = A given by index sets.
/// Returns the exponents when the multiplicity hypothesis holds.
template <Field F>
std::optional<std::vector<int>> supersolvable_exponents(const Multiarrangement<F>& a,
                                                         const std::vector<std::vector<std::size_t>>& filtration) {
  const std::size_t r = filtration.size();
  if (r < 2) throw ArrangementError("filtration: need at least two levels");
  std::vector<std::vector<bool>> member(r, std::vector<bool>(a.size(), false));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t h : filtration[i]) {
      if (h >= a.size()) throw ArrangementError("filtration: hyperplane index out of range");
      member[i][h] = true;
    }
  for (std::size_t h = 0; h < a.size(); ++h)
    if (!member[r - 1][h]) throw ArrangementError("filtration: top level is not the whole arrangement");
  auto sub = [&](std::size_t i) {
    std::vector<LinearForm> forms;
    std::vector<int> mults;
    for (std::size_t h = 0; h < a.size(); ++h)
      if (member[i][h]) {
        forms.push_back(a.form(h));
        mults.push_back(a.mult(h));
      }
    return Multiarrangement<F>::from_canonical(a.dim(), forms, mults);
  };
  auto spans_with = [&](std::size_t h1, std::size_t h2, std::size_t h3) {
    return rank(form_matrix<F>({a.form(h1), a.form(h2), a.form(h3)}, a.dim())) == 2;
  };
  for (std::size_t i = 0; i < r; ++i) {
    if (i > 0)
      for (std::size_t h = 0; h < a.size(); ++h)
        if (member[i - 1][h] && !member[i][h]) throw ArrangementError("filtration: levels are not nested");
    if (sub(i).rank() != i + 1) throw ArrangementError("filtration: rank of level " + std::to_string(i + 1) + " is wrong");
    if (i == 0) continue;
    for (std::size_t h1 = 0; h1 < a.size(); ++h1)
      for (std::size_t h2 = h1 + 1; h2 < a.size(); ++h2) {
        if (!member[i][h1] || !member[i][h2]) continue;
        bool ok = false;
        for (std::size_t h3 = 0; h3 < a.size() && !ok; ++h3)
          ok = member[i - 1][h3] && (h3 == h1 || h3 == h2 || spans_with(h1, h2, h3));
        if (!ok) throw ArrangementError("filtration: not supersolvable at level " + std::to_string(i + 1));
      }
  }

  // Hypothesis, with A_X taken inside A_d.
  for (std::size_t i = 2; i < r; ++i)
    for (std::size_t hp = 0; hp < a.size(); ++hp) {
      if (!member[i][hp] || member[i - 1][hp]) continue;
      for (std::size_t hpp = 0; hpp < a.size(); ++hpp) {
        if (!member[i - 1][hpp]) continue;
        std::size_t count = 0;
        int new_sum = 0;
        for (std::size_t h = 0; h < a.size(); ++h) {
          if (!member[i][h]) continue;
          if (h != hp && h != hpp && !spans_with(hp, hpp, h)) continue;
          ++count;
          if (!member[i - 1][h]) new_sum += a.mult(h);
        }
        if (count == 2) continue;
        if (a.mult(hpp) < new_sum - 1) return std::nullopt;
      }
    }

  auto a2 = essentialize_2d(sub(1)).arrangement;
  auto d12 = rank2_exponents(a2);
  std::vector<int> exps{d12[0], d12[1]};
  for (std::size_t i = 2; i < r; ++i) exps.push_back(sub(i).total() - sub(i - 1).total());
  while (exps.size() < a.dim()) exps.push_back(0);
  std::sort(exps.begin(), exps.end());
  return exps;
}

struct ScanEntry {
  std::vector<int> mults;
  Verdict verdict = Verdict::unknown;
  std::vector<int> exponents;
};

struct ScanReport {
  std::vector<ScanEntry> entries;
  std::size_t free_count = 0;
  std::size_t not_free_count = 0;
  std::size_t unknown_count = 0;

  bool totally_free() const { return !entries.empty() && free_count == entries.size(); }
  bool totally_non_free() const { return !entries.empty() && not_free_count == entries.size(); }
};

/// Every multiplicity vector with entries in [1, max_mult]. With a symmetry
/// group (list of permutations of hyperplane indices, identity optional),
/// only the lexicographically smallest vector of each orbit is decided.
template <Field F>
ScanReport totally_nonfree_scan(const Multiarrangement<F>& a, int max_mult,
                                const std::vector<std::vector<std::size_t>>& symmetries = {},
                                const DecideOptions& opt = {}) {
  if (max_mult < 1) throw std::invalid_argument("scan: max_mult must be positive");
  ScanReport rep;
  const std::size_t n = a.size();
  std::vector<int> m(n, 1);
  auto is_rep = [&]() {
    for (const auto& p : symmetries) {
      std::vector<int> img(n);
      for (std::size_t i = 0; i < n; ++i) img[p[i]] = m[i];
      if (img < m) return false;
    }
    return true;
  };
  while (true) {
    if (is_rep()) {
      auto c = decide_freeness(a.with_multiplicities(m), opt);
      rep.entries.push_back({m, c.verdict, c.exponents});
      if (c.verdict == Verdict::free) ++rep.free_count;
      else if (c.verdict == Verdict::not_free) ++rep.not_free_count;
      else ++rep.unknown_count;
    }
    std::size_t i = n;
    while (i > 0 && m[i - 1] == max_mult) m[--i] = 1;
    if (i == 0) break;
    ++m[i - 1];
  }
  return rep;
}

}  // namespace multiarr
