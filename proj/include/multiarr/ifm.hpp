#pragma once

// Inductive freeness search. A node records the hyperplane H0 used, the
// subtrees for (A',m') and (A'',m*), and the exponents obtained by raising
// the value of exp(A',m') that exp(A'',m*) leaves over.

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "multiarr/arrangement.hpp"
#include "multiarr/euler.hpp"
#include "multiarr/freeness.hpp"
#include "multiarr/rank2.hpp"

namespace multiarr {

enum class IFMKind { empty, small_rank, addition };

inline std::string to_string(IFMKind k) {
  switch (k) {
    case IFMKind::empty: return "empty";
    case IFMKind::small_rank: return "rank<=2";
    case IFMKind::addition: return "addition";
  }
  return "?";
}

template <Field F>
struct IFMNode {
  IFMKind kind = IFMKind::empty;
  Multiarrangement<F> arrangement;
  std::vector<int> exponents{};           // sorted
  std::vector<Derivation<F>> basis{};     // leaves only
  std::optional<F> scalar{};              // leaves: det M(basis) = scalar * Q
  std::size_t host = 0;                   // addition nodes: index of H0
  std::shared_ptr<const IFMNode> deletion{};
  std::shared_ptr<const IFMNode> restriction{};

  std::size_t node_count() const {
    std::size_t n = 1;
    if (deletion) n += deletion->node_count();
    if (restriction) n += restriction->node_count();
    return n;
  }
};

template <Field F>
using IFMTree = std::shared_ptr<const IFMNode<F>>;

template <Field F>
struct IFMResult {
  IFMTree<F> tree;               // null when no certificate was found
  bool exhaustive = true;        // false when the budget cut the search
  std::size_t expanded = 0;      // nodes expanded
};

namespace detail {

template <Field F>
std::string exact_key(const Multiarrangement<F>& a) {
  std::string s = std::to_string(a.dim()) + "#";
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (const auto& c : a.form(i).coeffs) s += c.get_str() + ",";
    s += ":" + std::to_string(a.mult(i)) + ";";
  }
  return s;
}

template <Field F>
IFMTree<F> leaf(const Multiarrangement<F>& a) {
  auto node = std::make_shared<IFMNode<F>>(IFMNode<F>{.kind = IFMKind::empty, .arrangement = a});
  if (a.empty()) {
    node->exponents.assign(a.dim(), 0);
    for (std::size_t j = 0; j < a.dim(); ++j)
      node->basis.push_back(Derivation<F>::monomial_field(j, Exponent(a.dim(), 0)));
    node->scalar = F(1);
    return node;
  }
  auto b = small_rank_basis(a);
  node->kind = IFMKind::small_rank;
  node->basis = std::move(b.basis);
  node->exponents = std::move(b.exponents);
  const auto s = saito_check(a, node->basis);
  if (!s) throw std::logic_error("ifm: leaf basis fails the determinant test");
  node->scalar = s->scalar;
  return node;
}

template <Field F>
class IFMSearch {
 public:
  explicit IFMSearch(std::size_t budget) : budget_(budget) {}

  IFMTree<F> run(const Multiarrangement<F>& a) {
    if (a.empty() || a.rank() <= 2) return leaf(a);
    const std::string exact = exact_key(a);
    if (auto it = found_.find(exact); it != found_.end()) return it->second;
    const std::string key = canonical_key(a);
    if (failed_.count(key)) return nullptr;
    if (expanded_ >= budget_) {
      exhausted_ = true;
      return nullptr;
    }
    ++expanded_;

    std::vector<std::size_t> order(a.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return a.mult(x) > a.mult(y); });
    for (std::size_t h : order) {
      auto del = run(deletion(a, h));
      if (!del) continue;
      auto er = euler_restriction(a, h);
      auto res = run(er.restriction.arrangement);
      if (!res) continue;
      auto d = leftover(del->exponents, res->exponents);
      if (!d) continue;
      auto node = std::make_shared<IFMNode<F>>(IFMNode<F>{.kind = IFMKind::addition, .arrangement = a});
      node->exponents = replace_one(del->exponents, *d, *d + 1);
      node->host = h;
      node->deletion = del;
      node->restriction = res;
      found_.emplace(exact, node);
      return node;
    }
    if (!exhausted_) failed_.insert(key);
    return nullptr;
  }

  bool exhausted() const { return exhausted_; }
  std::size_t expanded() const { return expanded_; }

 private:
  std::size_t budget_;
  std::size_t expanded_ = 0;
  bool exhausted_ = false;
  std::map<std::string, IFMTree<F>> found_;
  std::set<std::string> failed_;
};

}  // namespace detail

template <Field F>
IFMResult<F> inductively_free(const Multiarrangement<F>& a, std::size_t budget = 100000) {
  detail::IFMSearch<F> search(budget);
  IFMResult<F> r;
  r.tree = search.run(a);
  r.exhaustive = !search.exhausted();
  r.expanded = search.expanded();
  return r;
}

}  // namespace multiarr
