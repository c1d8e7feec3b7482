#pragma once

// Certificate documents and the search-free checker.
//
// Freeness certificate:
//   {"format": "multiarr-certificate", "version": 1, "kind": "freeness",
//    "field": ..., "arrangement": {...}, "verdict": "free"|"not_free"|"unknown",
//    "exponents": [...], "determinant_scalar": "c",
//    "basis": [{"degree": d, "components": [[[[e1,..,el], "coeff"], ...], ...]}],
//    "dims": [...], "degree_bound": n, "witness": {...} | null}
// IFM certificate: same header with "kind": "ifm" and a "tree" of nodes
//   {"type": "empty"|"rank<=2"|"addition", "arrangement", "exponents",
//    "basis" (leaves), "hyperplane", "deletion", "restriction"}.
//
// The checker never searches: it tests divisibility, determinants and
// recomputed graded dimensions.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "multiarr/arrangement_io.hpp"
#include "multiarr/derivation.hpp"
#include "multiarr/euler.hpp"
#include "multiarr/freeness.hpp"
#include "multiarr/ifm.hpp"

namespace multiarr {

inline constexpr const char* certificate_format = "multiarr-certificate";
inline constexpr int certificate_version = 1;

// ---- serialization --------------------------------------------------------

template <Field F>
json hpoly_to_json(const HPoly<F>& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back(json::array({e, field_traits<F>::to_string(c)}));
  return terms;
}

template <Field F>
json derivation_to_json(const Derivation<F>& d) {
  json comps = json::array();
  for (const auto& c : d.components()) comps.push_back(hpoly_to_json(c));
  return {{"degree", d.degree()}, {"components", comps}};
}

template <Field F>
json basis_to_json(const std::vector<Derivation<F>>& basis) {
  json out = json::array();
  for (const auto& d : basis) out.push_back(derivation_to_json(d));
  return out;
}

inline json witness_to_json(const Witness& w) {
  if (const auto* h = std::get_if<HilbertMismatch>(&w))
    return {{"type", "hilbert_mismatch"}, {"degree", h->degree}, {"dims", h->dims}};
  if (const auto* g = std::get_if<GeneratorOverflow>(&w))
    return {{"type", "generator_overflow"}, {"degrees", g->degrees}, {"dims", g->dims}, {"spans", g->spans}};
  return nullptr;
}

template <Field F>
json certificate_to_json(const FreenessCertificate<F>& c) {
  json j{{"format", certificate_format},
         {"version", certificate_version},
         {"kind", "freeness"},
         {"field", field_traits<F>::name()},
         {"arrangement", arrangement_to_json(c.arrangement)},
         {"verdict", to_string(c.verdict)},
         {"origin", c.origin},
         {"degree_bound", c.degree_bound},
         {"exponents", c.exponents},
         {"dims", c.dims},
         {"basis", basis_to_json(c.basis)},
         {"witness", witness_to_json(c.witness)}};
  j["determinant_scalar"] = c.scalar ? json(field_traits<F>::to_string(*c.scalar)) : json(nullptr);
  return j;
}

template <Field F>
json ifm_node_to_json(const IFMNode<F>& n) {
  json j{{"type", to_string(n.kind)}, {"arrangement", arrangement_to_json(n.arrangement)}, {"exponents", n.exponents}};
  if (n.kind == IFMKind::addition) {
    j["hyperplane"] = n.host;
    j["deletion"] = ifm_node_to_json(*n.deletion);
    j["restriction"] = ifm_node_to_json(*n.restriction);
  } else {
    j["basis"] = basis_to_json(n.basis);
    j["determinant_scalar"] = n.scalar ? json(field_traits<F>::to_string(*n.scalar)) : json(nullptr);
  }
  return j;
}

template <Field F>
json ifm_to_json(const IFMResult<F>& r, const Multiarrangement<F>& a) {
  json j{{"format", certificate_format},
         {"version", certificate_version},
         {"kind", "ifm"},
         {"field", field_traits<F>::name()},
         {"arrangement", arrangement_to_json(a)},
         {"exhaustive", r.exhaustive},
         {"found", static_cast<bool>(r.tree)}};
  j["tree"] = r.tree ? ifm_node_to_json(*r.tree) : json(nullptr);
  return j;
}

// ---- parsing ---------------------------------------------------------------

namespace io {

template <Field F>
F scalar(const json& v, const std::string& path) {
  if (!v.is_string()) throw FormatError(path, "expected a scalar string");
  try {
    return field_traits<F>::parse(v.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw FormatError(path, e.what());
  }
}

inline std::vector<int> int_list(const json& v, const std::string& path) {
  std::vector<int> out;
  const auto& a = array(v, path);
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(static_cast<int>(small_int(a[i], index(path, i))));
  return out;
}

inline std::vector<std::size_t> size_list(const json& v, const std::string& path) {
  std::vector<std::size_t> out;
  const auto& a = array(v, path);
  for (std::size_t i = 0; i < a.size(); ++i) {
    const long long x = small_int(a[i], index(path, i));
    if (x < 0) throw FormatError(index(path, i), "expected a non-negative integer");
    out.push_back(static_cast<std::size_t>(x));
  }
  return out;
}

template <Field F>
Derivation<F> derivation(const json& v, std::size_t dim, const std::string& path) {
  const long long deg = small_int(member(v, "degree", path), join(path, "degree"));
  if (deg < 0) throw FormatError(join(path, "degree"), "negative degree");
  const std::string cp = join(path, "components");
  const auto& comps = array(member(v, "components", path), cp);
  if (comps.size() != dim) throw FormatError(cp, "expected " + std::to_string(dim) + " components");
  std::vector<HPoly<F>> polys;
  for (std::size_t i = 0; i < dim; ++i) {
    const std::string pp = index(cp, i);
    HPoly<F> p(dim, static_cast<int>(deg));
    const auto& terms = array(comps[i], pp);
    for (std::size_t t = 0; t < terms.size(); ++t) {
      const std::string tp = index(pp, t);
      if (!terms[t].is_array() || terms[t].size() != 2) throw FormatError(tp, "expected [exponent, coefficient]");
      const auto e = int_list(terms[t][0], index(tp, 0));
      if (e.size() != dim || std::any_of(e.begin(), e.end(), [](int x) { return x < 0; }) ||
          total_degree(e) != deg)
        throw FormatError(index(tp, 0), "exponent does not match dimension and degree");
      if (p.coefficient(e) != F(0)) throw FormatError(index(tp, 0), "repeated exponent");
      p.add_term(e, scalar<F>(terms[t][1], index(tp, 1)));
    }
    polys.push_back(std::move(p));
  }
  Derivation<F> d(std::move(polys));
  if (!d.is_zero() && d.degree() != deg) throw FormatError(path, "degree mismatch");
  return d;
}

template <Field F>
std::vector<Derivation<F>> basis(const json& v, std::size_t dim, const std::string& path) {
  std::vector<Derivation<F>> out;
  const auto& a = array(v, path);
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(derivation<F>(a[i], dim, index(path, i)));
  return out;
}

}  // namespace io

// ---- checking --------------------------------------------------------------

struct CheckResult {
  bool ok = false;
  std::string kind;
  std::string verdict;
  std::string message;
};

namespace detail {

struct Reject {
  std::string why;
};

inline void require(bool cond, const std::string& why) {
  if (!cond) throw Reject{why};
}

/// dim (S_1 * D_{d-1}) inside Der_d.
template <Field F>
std::size_t linear_multiples_dimension(const Multiarrangement<F>& a, int d) {
  if (d == 0) return 0;
  const std::size_t l = a.dim();
  EchelonSpan<F> span(l * count_monomials(l, d));
  for (const auto& b : graded_basis(a, d - 1))
    for (std::size_t i = 0; i < l; ++i) span.insert((HPoly<F>::variable(l, i) * b).to_vector());
  return span.dimension();
}

/// Every multiset d_1 <= ... <= d_l with sum |m| disagrees with dims.
inline bool all_multisets_ruled_out(const std::vector<std::size_t>& dims, std::size_t l, int total) {
  std::vector<int> cur;
  std::function<bool(int, int)> rec = [&](int lo, int remaining) -> bool {
    if (cur.size() + 1 == l) {
      if (remaining < lo) return true;
      cur.push_back(remaining);
      bool mismatch = false;
      for (int d = 0; d < static_cast<int>(dims.size()) && !mismatch; ++d)
        mismatch = hilbert_value(cur, l, d) != dims[d];
      cur.pop_back();
      return mismatch;
    }
    for (int v = lo; v * static_cast<int>(l - cur.size()) <= remaining; ++v) {
      cur.push_back(v);
      const bool ok = rec(v, remaining - v);
      cur.pop_back();
      if (!ok) return false;
    }
    return true;
  };
  if (l == 0) return true;
  return rec(0, total);
}

template <Field F>
void check_dims(const Multiarrangement<F>& a, const std::vector<std::size_t>& dims) {
  for (std::size_t d = 0; d < dims.size(); ++d)
    require(graded_dimension(a, static_cast<int>(d)) == dims[d],
            "recorded dim D_" + std::to_string(d) + " = " + std::to_string(dims[d]) + " is wrong");
}

template <Field F>
void check_free_basis(const Multiarrangement<F>& a, const std::vector<Derivation<F>>& basis,
                      const std::vector<int>& exps, const std::optional<F>& scalar) {
  require(basis.size() == a.dim(), "basis must have " + std::to_string(a.dim()) + " elements");
  std::optional<SaitoResult<F>> s;
  try {
    s = saito_check(a, basis);
  } catch (const NotInModule& e) {
    throw Reject{e.what()};
  }
  require(s.has_value(), "determinant is not a nonzero multiple of Q");
  require(exps == s->exponents, "exponents differ from basis degrees");
  require(std::accumulate(exps.begin(), exps.end(), 0) == a.total(), "exponents do not sum to |m|");
  if (scalar) require(*scalar == s->scalar, "determinant scalar differs");
}

template <Field F>
void check_freeness(const json& j, const Multiarrangement<F>& a, const std::string& verdict) {
  const std::size_t l = a.dim();
  const auto dims = j.contains("dims") ? io::size_list(j.at("dims"), "dims") : std::vector<std::size_t>{};
  if (verdict == "free") {
    const auto exps = io::int_list(io::member(j, "exponents", ""), "exponents");
    require(std::is_sorted(exps.begin(), exps.end()), "exponents are not sorted");
    const auto basis = io::basis<F>(io::member(j, "basis", ""), l, "basis");
    require(!basis.empty(), "free certificate carries no basis");
    const auto& sc = io::member(j, "determinant_scalar", "");
    std::optional<F> scalar;
    if (!sc.is_null()) scalar = io::scalar<F>(sc, "determinant_scalar");
    require(scalar.has_value(), "missing determinant scalar");
    check_free_basis(a, basis, exps, scalar);
    check_dims(a, dims);
    return;
  }
  if (verdict == "unknown") {
    check_dims(a, dims);
    return;
  }
  require(verdict == "not_free", "unknown verdict '" + verdict + "'");
  const auto& w = io::member(j, "witness", "");
  const auto type = io::member(w, "type", "witness").get<std::string>();
  if (type == "hilbert_mismatch") {
    const long long deg = io::small_int(io::member(w, "degree", "witness"), "witness.degree");
    const auto wd = io::size_list(io::member(w, "dims", "witness"), "witness.dims");
    require(deg >= 0 && static_cast<std::size_t>(deg) + 1 == wd.size(), "witness degree and dims disagree");
    check_dims(a, wd);
    require(all_multisets_ruled_out(wd, l, a.total()), "some exponent multiset fits the recorded dimensions");
    return;
  }
  require(type == "generator_overflow", "unknown witness type '" + type + "'");
  const auto degrees = io::int_list(io::member(w, "degrees", "witness"), "witness.degrees");
  const auto wd = io::size_list(io::member(w, "dims", "witness"), "witness.dims");
  const auto spans = io::size_list(io::member(w, "spans", "witness"), "witness.spans");
  require(!wd.empty() && wd.size() == spans.size(), "witness dims and spans disagree in length");
  check_dims(a, wd);
  std::vector<int> implied;
  for (std::size_t d = 0; d < wd.size(); ++d) {
    require(linear_multiples_dimension(a, static_cast<int>(d)) == spans[d],
            "recorded span dimension at degree " + std::to_string(d) + " is wrong");
    require(wd[d] >= spans[d], "span exceeds graded piece");
    for (std::size_t k = 0; k < wd[d] - spans[d]; ++k) implied.push_back(static_cast<int>(d));
  }
  require(implied == degrees, "generator degrees do not match the recomputed counts");
  const int sum = std::accumulate(implied.begin(), implied.end(), 0);
  require(implied.size() > l || sum > a.total(), "generator counts do not exceed a free module's");
}

template <Field F>
std::vector<int> check_ifm_node(const json& n, const std::string& path, std::size_t& nodes) {
  ++nodes;
  const auto a = arrangement_from_json(io::member(n, "arrangement", path), io::join(path, "arrangement")).build<F>();
  const auto exps = io::int_list(io::member(n, "exponents", path), io::join(path, "exponents"));
  require(exps.size() == a.dim(), path + ": wrong number of exponents");
  require(std::is_sorted(exps.begin(), exps.end()), path + ": exponents are not sorted");
  const auto type = io::member(n, "type", path).get<std::string>();
  if (type == "empty" || type == "rank<=2") {
    if (type == "empty")
      require(a.empty(), path + ": empty leaf with hyperplanes");
    else
      require(!a.empty() && a.rank() <= 2, path + ": leaf rank exceeds 2");
    const auto basis = io::basis<F>(io::member(n, "basis", path), a.dim(), io::join(path, "basis"));
    const auto& sc = io::member(n, "determinant_scalar", path);
    require(!sc.is_null(), path + ": missing determinant scalar");
    const auto scalar = io::scalar<F>(sc, io::join(path, "determinant_scalar"));
    try {
      check_free_basis(a, basis, exps, std::optional<F>(scalar));
    } catch (const Reject& r) {
      throw Reject{path + ": " + r.why};
    }
    return exps;
  }
  require(type == "addition", path + ": unknown node type '" + type + "'");
  const long long h = io::small_int(io::member(n, "hyperplane", path), io::join(path, "hyperplane"));
  require(h >= 0 && static_cast<std::size_t>(h) < a.size(), path + ": hyperplane index out of range");
  const std::size_t h0 = static_cast<std::size_t>(h);
  const std::string dp = io::join(path, "deletion");
  const std::string rp = io::join(path, "restriction");
  const auto& dj = io::member(n, "deletion", path);
  const auto& rj = io::member(n, "restriction", path);
  require(arrangement_from_json(io::member(dj, "arrangement", dp)).build<F>() == deletion(a, h0),
          dp + ": not the deletion");
  require(arrangement_from_json(io::member(rj, "arrangement", rp)).build<F>() ==
              euler_restriction(a, h0).restriction.arrangement,
          rp + ": not the Euler restriction");
  const auto de = check_ifm_node<F>(dj, dp, nodes);
  const auto re = check_ifm_node<F>(rj, rp, nodes);
  const auto d = leftover(de, re);
  require(d.has_value(), path + ": restriction exponents are not contained in deletion exponents");
  require(exps == replace_one(de, *d, *d + 1), path + ": exponents do not follow the addition pattern");
  return exps;
}

}  // namespace detail

inline CheckResult check_certificate(const json& j) {
  CheckResult r;
  try {
    detail::require(j.is_object() && j.value("format", "") == certificate_format, "not a certificate document");
    detail::require(j.value("version", 0) == certificate_version, "unsupported certificate version");
    r.kind = io::member(j, "kind", "").get<std::string>();
    const auto field = io::member(j, "field", "").get<std::string>();
    const auto data = arrangement_from_json(io::member(j, "arrangement", ""), "arrangement");
    detail::require(data.field == field, "arrangement field differs from certificate field");
    with_field(field, [&](auto tag) {
      using F = typename decltype(tag)::type;
      const auto a = data.build<F>();
      if (r.kind == "freeness") {
        r.verdict = io::member(j, "verdict", "").get<std::string>();
        detail::require(data.hyperplanes.size() == a.size(), "arrangement is not in normal form");
        detail::check_freeness<F>(j, a, r.verdict);
      } else if (r.kind == "ifm") {
        const auto& tree = io::member(j, "tree", "");
        if (tree.is_null()) {
          r.verdict = "no_tree";
          return;
        }
        const auto root = arrangement_from_json(io::member(tree, "arrangement", "tree"), "tree.arrangement").build<F>();
        detail::require(root == a, "tree root is not the certified arrangement");
        std::size_t nodes = 0;
        detail::check_ifm_node<F>(tree, "tree", nodes);
        r.verdict = "inductively_free";
      } else {
        throw detail::Reject{"unknown certificate kind '" + r.kind + "'"};
      }
    });
    r.ok = true;
    r.message = "ok";
  } catch (const detail::Reject& e) {
    r.message = e.why;
  } catch (const FormatError& e) {
    r.message = e.what();
  } catch (const json::exception& e) {
    r.message = e.what();
  } catch (const std::invalid_argument& e) {
    r.message = e.what();
  }
  return r;
}

inline CheckResult check_certificate_text(const std::string& text) {
  try {
    return check_certificate(json::parse(text));
  } catch (const json::parse_error& e) {
    CheckResult r;
    r.message = e.what();
    return r;
  }
}

}  // namespace multiarr
