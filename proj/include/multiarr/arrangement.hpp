#pragma once

// Multiarrangements of central hyperplanes: canonical forms, deletion,
// codimension-two flats through a chosen hyperplane, localization,
// restriction charts, products and essentialization.

#include <algorithm>
#include <array>
#include <optional>
#include <cstddef>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "multiarr/field.hpp"
#include "multiarr/hpoly.hpp"
#include "multiarr/linalg.hpp"

namespace multiarr {

class ArrangementError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Canonical integer covector of a hyperplane.
struct LinearForm {
  std::vector<Integer> coeffs;

  std::size_t dim() const { return coeffs.size(); }

  friend bool operator==(const LinearForm& a, const LinearForm& b) { return a.coeffs == b.coeffs; }
  friend bool operator<(const LinearForm& a, const LinearForm& b) {
    return std::lexicographical_compare(a.coeffs.begin(), a.coeffs.end(), b.coeffs.begin(), b.coeffs.end());
  }

  template <Field F>
  std::vector<F> as_field() const {
    std::vector<F> v;
    v.reserve(coeffs.size());
    for (const auto& c : coeffs) v.push_back(field_traits<F>::from_integer(c));
    return v;
  }

  std::string to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      const Integer& c = coeffs[i];
      if (c == 0) continue;
      Integer a = abs(c);
      if (first)
        os << (c < 0 ? "-" : "");
      else
        os << (c < 0 ? " - " : " + ");
      if (a != 1) os << a.get_str() << '*';
      os << 'x' << (i + 1);
      first = false;
    }
    return first ? "0" : os.str();
  }
};

template <Field F>
LinearForm canonical_form(const std::vector<Integer>& raw) {
  try {
    return LinearForm{field_traits<F>::canonical_form(raw)};
  } catch (const std::invalid_argument&) {
    throw ArrangementError("zero linear form");
  }
}

template <Field F>
LinearForm canonical_form_of(const std::vector<F>& v) {
  try {
    return LinearForm{field_traits<F>::canonical_form(v)};
  } catch (const std::invalid_argument&) {
    throw ArrangementError("zero linear form");
  }
}

template <Field F>
Matrix<F> form_matrix(const std::vector<LinearForm>& forms, std::size_t dim) {
  Matrix<F> m(0, dim);
  for (const auto& f : forms) m.append_row(f.as_field<F>());
  return m;
}

/// A multiarrangement (A, m): distinct hyperplanes in canonical
/// (lexicographic) order with positive multiplicities.
template <Field F = Rational>
class Multiarrangement {
 public:
  using field_type = F;

  explicit Multiarrangement(std::size_t dim) : dim_(dim) {}

  /// Canonicalizes every form, merges proportional ones (summing
  /// multiplicities) and sorts.
  static Multiarrangement normalize(std::size_t dim, const std::vector<std::pair<std::vector<Integer>, int>>& raw) {
    std::map<LinearForm, int> merged;
    for (const auto& [coeffs, mult] : raw) {
      if (coeffs.size() != dim) throw ArrangementError("linear form has wrong length");
      if (mult < 1) throw ArrangementError("multiplicity must be positive");
      merged[canonical_form<F>(coeffs)] += mult;
    }
    Multiarrangement a(dim);
    for (auto& [form, mult] : merged) {
      a.forms_.push_back(form);
      a.mults_.push_back(mult);
    }
    return a;
  }

  static Multiarrangement normalize(std::size_t dim, const std::vector<std::vector<long>>& forms,
                                    const std::vector<int>& mults) {
    if (forms.size() != mults.size()) throw ArrangementError("forms and multiplicities differ in length");
    std::vector<std::pair<std::vector<Integer>, int>> raw;
    for (std::size_t i = 0; i < forms.size(); ++i) {
      std::vector<Integer> c(forms[i].begin(), forms[i].end());
      raw.emplace_back(std::move(c), mults[i]);
    }
    return normalize(dim, raw);
  }

  /// Assumes forms are canonical and distinct; used internally after
  /// operations that preserve canonicity.
  static Multiarrangement from_canonical(std::size_t dim, std::vector<LinearForm> forms, std::vector<int> mults) {
    std::vector<std::pair<std::vector<Integer>, int>> raw;
    for (std::size_t i = 0; i < forms.size(); ++i) raw.emplace_back(std::move(forms[i].coeffs), mults[i]);
    return normalize(dim, raw);
  }

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return forms_.size(); }
  bool empty() const { return forms_.empty(); }
  const LinearForm& form(std::size_t i) const { return forms_.at(i); }
  int mult(std::size_t i) const { return mults_.at(i); }
  const std::vector<LinearForm>& forms() const { return forms_; }
  const std::vector<int>& mults() const { return mults_; }

  /// |m|
  int total() const { return std::accumulate(mults_.begin(), mults_.end(), 0); }

  bool is_simple() const {
    return std::all_of(mults_.begin(), mults_.end(), [](int m) { return m == 1; });
  }

  std::optional<std::size_t> find(const LinearForm& canonical) const {
    auto it = std::lower_bound(forms_.begin(), forms_.end(), canonical);
    if (it == forms_.end() || !(*it == canonical)) return std::nullopt;
    return static_cast<std::size_t>(it - forms_.begin());
  }

  std::size_t index_of(const std::vector<Integer>& raw) const {
    auto i = find(canonical_form<F>(raw));
    if (!i) throw ArrangementError("hyperplane not in arrangement");
    return *i;
  }

  Multiarrangement with_multiplicities(const std::vector<int>& m) const {
    if (m.size() != forms_.size()) throw ArrangementError("multiplicity vector has wrong length");
    for (int v : m)
      if (v < 1) throw ArrangementError("multiplicity must be positive");
    Multiarrangement a = *this;
    a.mults_ = m;
    return a;
  }

  Multiarrangement simple() const { return with_multiplicities(std::vector<int>(size(), 1)); }

  std::vector<F> alpha(std::size_t i) const { return form(i).template as_field<F>(); }

  std::size_t rank() const {
    if (empty()) return 0;
    return multiarr::rank(form_matrix<F>(forms_, dim_));
  }

  std::string to_string() const {
    if (empty()) return "empty arrangement in dimension " + std::to_string(dim_);
    std::ostringstream os;
    for (std::size_t i = 0; i < size(); ++i) {
      if (i) os << " * ";
      os << '(' << forms_[i].to_string() << ')';
      if (mults_[i] != 1) os << '^' << mults_[i];
    }
    return os.str();
  }

  friend bool operator==(const Multiarrangement& a, const Multiarrangement& b) {
    return a.dim_ == b.dim_ && a.forms_ == b.forms_ && a.mults_ == b.mults_;
  }

 private:
  std::size_t dim_;
  std::vector<LinearForm> forms_;
  std::vector<int> mults_;
};

template <Field F>
HPoly<F> defining_polynomial(const Multiarrangement<F>& a) {
  HPoly<F> q = HPoly<F>::constant(a.dim(), F(1));
  for (std::size_t i = 0; i < a.size(); ++i) q = q * HPoly<F>::linear(a.alpha(i)).pow(a.mult(i));
  return q;
}

/// Lowers m(H0) by one, removing H0 when it reaches zero.
template <Field F>
Multiarrangement<F> deletion(const Multiarrangement<F>& a, std::size_t h0) {
  if (h0 >= a.size()) throw ArrangementError("deletion: hyperplane not in arrangement");
  std::vector<LinearForm> forms;
  std::vector<int> mults;
  for (std::size_t i = 0; i < a.size(); ++i) {
    int m = a.mult(i) - (i == h0 ? 1 : 0);
    if (m == 0) continue;
    forms.push_back(a.form(i));
    mults.push_back(m);
  }
  return Multiarrangement<F>::from_canonical(a.dim(), std::move(forms), std::move(mults));
}

/// Integer coordinates on a hyperplane H0 = ker(alpha0). With p the first
/// nonzero position of alpha0, the basis of H0 is v_i = a_p e_i - a_i e_p
/// for i != p, and coordinate y_i on H0 pairs with v_i.
struct HyperplaneChart {
  LinearForm host;
  std::size_t pivot = 0;
  std::vector<std::vector<Integer>> basis;  // dim-1 vectors of length dim

  explicit HyperplaneChart(const LinearForm& alpha0) : host(alpha0) {
    const std::size_t n = alpha0.dim();
    while (pivot < n && alpha0.coeffs[pivot] == 0) ++pivot;
    if (pivot == n) throw ArrangementError("zero linear form");
    const Integer& ap = alpha0.coeffs[pivot];
    for (std::size_t i = 0; i < n; ++i) {
      if (i == pivot) continue;
      std::vector<Integer> v(n, 0);
      v[i] = ap;
      v[pivot] = -alpha0.coeffs[i];
      basis.push_back(std::move(v));
    }
  }

  std::size_t dim() const { return host.dim(); }

  /// alpha restricted to H0, in chart coordinates (unnormalized).
  std::vector<Integer> restrict_form(const LinearForm& alpha) const {
    std::vector<Integer> out;
    out.reserve(basis.size());
    for (const auto& v : basis) {
      Integer s = 0;
      for (std::size_t j = 0; j < v.size(); ++j) s += alpha.coeffs[j] * v[j];
      out.push_back(s);
    }
    return out;
  }

  /// Images of x_1..x_n as linear forms in the chart coordinates.
  template <Field F>
  std::vector<HPoly<F>> coordinate_images() const {
    const std::size_t n = dim();
    std::vector<HPoly<F>> images;
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<F> c;
      for (const auto& v : basis) c.push_back(field_traits<F>::from_integer(v[j]));
      images.push_back(HPoly<F>::linear(c));
    }
    return images;
  }
};

/// Codimension-two flat X = H0 ∩ K, identified by its hyperplane set A_X.
struct Flat2 {
  std::size_t host = 0;                  // index of H0
  std::vector<std::size_t> hyperplanes;  // indices of A_X (includes host), increasing
  LinearForm trace;                      // canonical restricted form on H0
  std::array<LinearForm, 2> annihilator; // alpha0 and one other form of A_X

  /// A_X without H0, increasing.
  std::vector<std::size_t> others() const {
    std::vector<std::size_t> o;
    for (std::size_t i : hyperplanes)
      if (i != host) o.push_back(i);
    return o;
  }
};

/// Partition of A \ {H0} by the flat H0 ∩ K; flats ordered by their traces.
template <Field F>
std::vector<Flat2> rank2_flats(const Multiarrangement<F>& a, std::size_t h0) {
  if (h0 >= a.size()) throw ArrangementError("rank2_flats: hyperplane not in arrangement");
  if (a.dim() < 2) throw ArrangementError("rank2_flats: dimension must be at least 2");
  HyperplaneChart chart(a.form(h0));
  std::map<LinearForm, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i == h0) continue;
    groups[canonical_form<F>(chart.restrict_form(a.form(i)))].push_back(i);
  }
  std::vector<Flat2> flats;
  for (auto& [trace, members] : groups) {
    Flat2 x;
    x.host = h0;
    x.trace = trace;
    x.annihilator = {a.form(h0), a.form(members.front())};
    x.hyperplanes = members;
    x.hyperplanes.push_back(h0);
    std::sort(x.hyperplanes.begin(), x.hyperplanes.end());
    flats.push_back(std::move(x));
  }
  return flats;
}

/// (A_X, m_X); also reports where H0 landed.
template <Field F>
struct Localization {
  Multiarrangement<F> arrangement;
  std::size_t host = 0;                  // index of H0 inside arrangement
  std::vector<std::size_t> source;       // source[i] = index in the parent of hyperplane i
};

template <Field F>
Localization<F> localization(const Multiarrangement<F>& a, const Flat2& x) {
  std::vector<LinearForm> forms;
  std::vector<int> mults;
  for (std::size_t i : x.hyperplanes) {
    forms.push_back(a.form(i));
    mults.push_back(a.mult(i));
  }
  // Subsets of a canonical arrangement stay canonical and sorted.
  Localization<F> loc{Multiarrangement<F>::from_canonical(a.dim(), forms, mults), 0, x.hyperplanes};
  loc.host = static_cast<std::size_t>(std::find(x.hyperplanes.begin(), x.hyperplanes.end(), x.host) -
                                      x.hyperplanes.begin());
  return loc;
}

/// An arrangement rewritten in coordinates on the span of its forms.
/// Row i of `rows` is the covector that the new coordinate u_i stands for.
template <Field F>
struct Essentialization {
  Multiarrangement<F> arrangement;
  std::vector<std::vector<F>> rows;
  std::vector<std::size_t> pivots;       // pivot column of each row
  std::vector<std::size_t> target;       // target[i] = index in arrangement of source hyperplane i
};

template <Field F>
Essentialization<F> essentialize(const Multiarrangement<F>& a) {
  Essentialization<F> out{Multiarrangement<F>(0), {}, {}, {}};
  if (a.empty()) return out;
  auto ech = rref(form_matrix<F>(a.forms(), a.dim()));
  const std::size_t r = ech.rank();
  for (std::size_t i = 0; i < r; ++i) out.rows.push_back(ech.reduced.row(i));
  out.pivots = ech.pivots;
  // In RREF coordinates the coefficient of u_i is the form's pivot entry.
  std::vector<std::pair<std::vector<Integer>, int>> raw;
  std::vector<LinearForm> reduced_forms;
  for (std::size_t h = 0; h < a.size(); ++h) {
    auto v = a.alpha(h);
    std::vector<F> c;
    for (std::size_t p : out.pivots) c.push_back(v[p]);
    LinearForm lf = canonical_form_of<F>(c);
    reduced_forms.push_back(lf);
    raw.emplace_back(lf.coeffs, a.mult(h));
  }
  out.arrangement = Multiarrangement<F>::normalize(r, raw);
  if (out.arrangement.size() != a.size()) throw std::logic_error("essentialize: hyperplanes merged");
  for (const auto& lf : reduced_forms) out.target.push_back(*out.arrangement.find(lf));
  return out;
}

/// Rank-2 localization rewritten in two variables.
template <Field F>
Essentialization<F> essentialize_2d(const Multiarrangement<F>& ax) {
  auto e = essentialize(ax);
  if (e.rows.size() != 2) throw ArrangementError("essentialize_2d: forms do not span a 2-dimensional space");
  return e;
}

/// The restriction A'' on H0 as an (l-1)-dimensional arrangement; hyperplane
/// i of `arrangement` is the trace of flats[i]. Multiplicities hold the
/// combinatorial m'' until the Euler multiplicities replace them.
template <Field F>
struct RestrictedArrangement {
  std::size_t host = 0;
  HyperplaneChart chart;
  Multiarrangement<F> arrangement;
  std::vector<Flat2> flats;
};

template <Field F>
int combinatorial_multiplicity(const Multiarrangement<F>& a, const Flat2& x) {
  int s = 0;
  for (std::size_t i : x.others()) s += a.mult(i);
  return s;
}

template <Field F>
RestrictedArrangement<F> restrict_to(const Multiarrangement<F>& a, std::size_t h0) {
  auto flats = rank2_flats(a, h0);
  std::vector<LinearForm> forms;
  std::vector<int> mults;
  for (const auto& x : flats) {
    forms.push_back(x.trace);
    mults.push_back(combinatorial_multiplicity(a, x));
  }
  auto restricted = Multiarrangement<F>::from_canonical(a.dim() - 1, forms, mults);
  return RestrictedArrangement<F>{h0, HyperplaneChart(a.form(h0)), std::move(restricted), std::move(flats)};
}

/// A1 x A2 in V1 ⊕ V2.
template <Field F>
Multiarrangement<F> product(const Multiarrangement<F>& a1, const Multiarrangement<F>& a2) {
  const std::size_t n = a1.dim() + a2.dim();
  std::vector<std::pair<std::vector<Integer>, int>> raw;
  for (std::size_t i = 0; i < a1.size(); ++i) {
    std::vector<Integer> c(n, 0);
    std::copy(a1.form(i).coeffs.begin(), a1.form(i).coeffs.end(), c.begin());
    raw.emplace_back(std::move(c), a1.mult(i));
  }
  for (std::size_t i = 0; i < a2.size(); ++i) {
    std::vector<Integer> c(n, 0);
    std::copy(a2.form(i).coeffs.begin(), a2.form(i).coeffs.end(), c.begin() + static_cast<long>(a1.dim()));
    raw.emplace_back(std::move(c), a2.mult(i));
  }
  return Multiarrangement<F>::normalize(n, raw);
}

/// Memo key: rank plus sorted (form, multiplicity) pairs after
/// essentialization.
template <Field F>
std::string canonical_key(const Multiarrangement<F>& a) {
  auto e = essentialize(a);
  std::ostringstream os;
  os << e.arrangement.dim() << '|';
  for (std::size_t i = 0; i < e.arrangement.size(); ++i) {
    for (const auto& c : e.arrangement.form(i).coeffs) os << c.get_str() << ',';
    os << ':' << e.arrangement.mult(i) << ';';
  }
  return os.str();
}

}  // namespace multiarr
