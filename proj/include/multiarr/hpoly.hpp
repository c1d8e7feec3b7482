#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "multiarr/field.hpp"

namespace multiarr {

using Exponent = std::vector<int>;

inline int total_degree(const Exponent& e) {
  int s = 0;
  for (int v : e) s += v;
  return s;
}

/// Number of monomials of the given degree in nvars variables.
inline std::size_t count_monomials(std::size_t nvars, int degree) {
  if (degree < 0) return 0;
  if (nvars == 0) return degree == 0 ? 1 : 0;
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(degree) + nvars - 1, nvars - 1);
  return b.get_ui();
}

/// All monomials of a degree, in lexicographically decreasing order
/// (x1^d first). This is the graded-lex order used for every term map.
inline std::vector<Exponent> monomials(std::size_t nvars, int degree) {
  std::vector<Exponent> out;
  if (degree < 0) return out;
  out.reserve(count_monomials(nvars, degree));
  if (nvars == 0) {
    if (degree == 0) out.emplace_back();
    return out;
  }
  Exponent e(nvars, 0);
  // Recursive fill; first variable takes the largest share first.
  auto rec = [&](auto&& self, std::size_t pos, int remaining) -> void {
    if (pos + 1 == nvars) {
      e[pos] = remaining;
      out.push_back(e);
      return;
    }
    for (int v = remaining; v >= 0; --v) {
      e[pos] = v;
      self(self, pos + 1, remaining - v);
    }
  };
  rec(rec, 0, degree);
  return out;
}

/// Position of e within monomials(e.size(), total_degree(e)).
inline std::size_t monomial_index(const Exponent& e) {
  std::size_t idx = 0;
  int remaining = total_degree(e);
  const std::size_t n = e.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (int t = remaining; t > e[i]; --t) idx += count_monomials(n - i - 1, remaining - t);
    remaining -= e[i];
  }
  return idx;
}

/// Homogeneous polynomial in a fixed number of variables. The zero
/// polynomial has an empty term map and keeps a nominal degree.
template <Field F>
class HPoly {
 public:
  using Terms = std::map<Exponent, F, std::greater<Exponent>>;

  HPoly(std::size_t dim, int degree) : dim_(dim), degree_(degree) {
    if (degree < 0) throw std::invalid_argument("HPoly: negative degree");
  }

  static HPoly constant(std::size_t dim, const F& c) {
    HPoly p(dim, 0);
    p.add_term(Exponent(dim, 0), c);
    return p;
  }
  static HPoly monomial(const Exponent& e, const F& c = F(1)) {
    HPoly p(e.size(), total_degree(e));
    p.add_term(e, c);
    return p;
  }
  static HPoly variable(std::size_t dim, std::size_t i) {
    Exponent e(dim, 0);
    e.at(i) = 1;
    return monomial(e);
  }
  static HPoly linear(const std::vector<F>& coeffs) {
    HPoly p(coeffs.size(), 1);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      Exponent e(coeffs.size(), 0);
      e[i] = 1;
      p.add_term(e, coeffs[i]);
    }
    return p;
  }

  std::size_t dim() const { return dim_; }
  int degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  F coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? F(0) : it->second;
  }

  void add_term(const Exponent& e, const F& c) {
    if (e.size() != dim_ || total_degree(e) != degree_)
      throw std::invalid_argument("HPoly: term does not match dimension/degree");
    if (multiarr::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (multiarr::is_zero(it->second)) terms_.erase(it);
    }
  }

  HPoly& operator+=(const HPoly& o) { return accumulate(o, F(1)); }
  HPoly& operator-=(const HPoly& o) { return accumulate(o, F(-1)); }

  /// this += c * o
  HPoly& accumulate(const HPoly& o, const F& c) {
    check_dim(o);
    if (o.is_zero() || multiarr::is_zero(c)) return *this;
    if (is_zero()) degree_ = o.degree_;
    if (o.degree_ != degree_) throw std::invalid_argument("HPoly: adding polynomials of different degree");
    for (const auto& [e, v] : o.terms_) add_term(e, c * v);
    return *this;
  }

  HPoly& operator*=(const F& c) {
    if (multiarr::is_zero(c)) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
  }

  friend HPoly operator+(HPoly a, const HPoly& b) { return a += b; }
  friend HPoly operator-(HPoly a, const HPoly& b) { return a -= b; }
  friend HPoly operator-(HPoly a) { return a *= F(-1); }
  friend HPoly operator*(HPoly a, const F& c) { return a *= c; }
  friend HPoly operator*(const F& c, HPoly a) { return a *= c; }

  friend HPoly operator*(const HPoly& a, const HPoly& b) {
    a.check_dim(b);
    HPoly r(a.dim_, a.degree_ + b.degree_);
    Exponent e(a.dim_);
    for (const auto& [ea, va] : a.terms_)
      for (const auto& [eb, vb] : b.terms_) {
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, va * vb);
      }
    return r;
  }

  HPoly pow(unsigned k) const {
    HPoly acc = constant(dim_, F(1));
    for (unsigned i = 0; i < k; ++i) acc = acc * *this;
    return acc;
  }

  /// Zero polynomials compare equal regardless of nominal degree.
  friend bool operator==(const HPoly& a, const HPoly& b) {
    if (a.dim_ != b.dim_) return false;
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    return a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      std::string cs = field_traits<F>::to_string(c);
      bool neg = !cs.empty() && cs[0] == '-';
      if (neg) cs.erase(0, 1);
      if (first)
        os << (neg ? "-" : "");
      else
        os << (neg ? " - " : " + ");
      first = false;
      bool has_var = total_degree(e) > 0;
      bool unit = cs == "1";
      if (!unit || !has_var) os << cs;
      bool need_star = !unit;
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (need_star) os << '*';
        os << 'x' << (i + 1);
        if (e[i] > 1) os << '^' << e[i];
        need_star = true;
      }
    }
    return os.str();
  }

 private:
  void check_dim(const HPoly& o) const {
    if (o.dim_ != dim_) throw std::invalid_argument("HPoly: dimension mismatch");
  }

  std::size_t dim_;
  int degree_;
  Terms terms_;
};

template <Field F>
HPoly<F> hpoly_mul(const HPoly<F>& p, const HPoly<F>& q) {
  return p * q;
}

namespace detail {

template <Field F>
std::size_t leading_index(const std::vector<F>& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!is_zero(v[i])) return i;
  throw std::invalid_argument("zero linear form");
}

/// Exact division by one linear form; nullopt when there is a remainder.
template <Field F>
std::optional<HPoly<F>> divide_once(const HPoly<F>& p, const std::vector<F>& alpha) {
  const std::size_t q = leading_index(alpha);
  if (p.is_zero()) return HPoly<F>(p.dim(), std::max(p.degree() - 1, 0));
  if (p.degree() == 0) return std::nullopt;
  HPoly<F> work = p;
  HPoly<F> quot(p.dim(), p.degree() - 1);
  const F lead_inv = F(1) / alpha[q];
  while (!work.is_zero()) {
    const auto& [e, c] = *work.terms().begin();
    // Lex-largest term not divisible by x_q: a nonzero remainder term.
    if (e[q] == 0) return std::nullopt;
    Exponent qe = e;
    qe[q] -= 1;
    F qc = c * lead_inv;
    quot.add_term(qe, qc);
    HPoly<F> step = HPoly<F>::monomial(qe, qc) * HPoly<F>::linear(alpha);
    work -= step;
  }
  return quot;
}

}  // namespace detail

/// p / alpha^k when alpha^k divides p, nullopt otherwise.
template <Field F>
std::optional<HPoly<F>> hpoly_divide_by_form(const HPoly<F>& p, const std::vector<F>& alpha, unsigned k) {
  if (alpha.size() != p.dim()) throw std::invalid_argument("form dimension mismatch");
  detail::leading_index(alpha);
  if (p.is_zero()) return HPoly<F>(p.dim(), std::max(p.degree() - static_cast<int>(k), 0));
  if (static_cast<int>(k) > p.degree()) return std::nullopt;
  HPoly<F> cur = p;
  for (unsigned i = 0; i < k; ++i) {
    auto next = detail::divide_once(cur, alpha);
    if (!next) return std::nullopt;
    cur = std::move(*next);
  }
  return cur;
}

template <Field F>
bool divisible_by_form_power(const HPoly<F>& p, const std::vector<F>& alpha, unsigned k) {
  return hpoly_divide_by_form(p, alpha, k).has_value();
}

/// Linear change of variables: x_i -> images[i], each image a linear form in
/// the target variables.
template <Field F>
HPoly<F> substitute(const HPoly<F>& p, const std::vector<HPoly<F>>& images) {
  if (images.size() != p.dim()) throw std::invalid_argument("substitute: wrong image count");
  const std::size_t target_dim = images.empty() ? 0 : images.front().dim();
  for (const auto& im : images)
    if (im.dim() != target_dim || (!im.is_zero() && im.degree() != 1))
      throw std::invalid_argument("substitute: images must be linear forms in a common space");
  HPoly<F> out(target_dim, p.degree());
  std::vector<std::vector<HPoly<F>>> powers(images.size());
  for (std::size_t i = 0; i < images.size(); ++i) powers[i].push_back(HPoly<F>::constant(target_dim, F(1)));
  auto power = [&](std::size_t i, int k) -> const HPoly<F>& {
    while (static_cast<int>(powers[i].size()) <= k) powers[i].push_back(powers[i].back() * images[i]);
    return powers[i][k];
  };
  for (const auto& [e, c] : p.terms()) {
    HPoly<F> term = HPoly<F>::constant(target_dim, c);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0) term = term * power(i, e[i]);
    out += term;
  }
  return out;
}

}  // namespace multiarr
