#pragma once

// Golden checks over the bundled examples: each table row compares a stated
// value with the value computed by the library.

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "multiarr/catalogue.hpp"
#include "multiarr/certificate_io.hpp"
#include "multiarr/euler.hpp"
#include "multiarr/freeness.hpp"

namespace multiarr {

struct ReproRow {
  std::string claim;
  std::string expected;
  std::string observed;
  bool pass = false;
};

struct ReproTable {
  std::string id;
  std::string title;
  std::vector<ReproRow> rows;

  bool passed() const {
    for (const auto& r : rows)
      if (!r.pass) return false;
    return !rows.empty();
  }
};

inline std::string format_list(const std::vector<int>& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

inline std::string format_cert(const FreenessCertificate<Rational>& c) {
  return c.is_free() ? "free " + format_list(c.exponents) : to_string(c.verdict);
}

namespace detail {

inline void row(ReproTable& t, std::string claim, std::string expected, std::string observed) {
  const bool ok = expected == observed;
  t.rows.push_back({std::move(claim), std::move(expected), std::move(observed), ok});
}

inline ReproTable repro_pencil() {
  ReproTable t{"pencil", "Euler multiplicity on x1 for x1^4 x2^3 (x1-x2)(x1-xi x2)", {}};
  const std::vector<std::pair<long, int>> cases{{-1, 5}, {2, 4}, {3, 4}, {5, 4}, {-2, 4}};
  for (const auto& [xi, expected] : cases) {
    const auto a = catalogue::pencil(Rational(xi));
    const std::size_t h0 = a.index_of({Integer(1), Integer(0)});
    const auto x = rank2_flats(a, h0).front();
    const auto rep = euler_multiplicity(a, h0, x);
    row(t, "m*(X), xi=" + std::to_string(xi), std::to_string(expected), std::to_string(rep.value));
    const auto b = catalogue::pencil_basis(Rational(xi));
    std::string observed = "rejected";
    try {
      if (auto s = saito_check(a, {b[0], b[1]})) observed = "basis " + format_list(s->exponents);
    } catch (const NotInModule&) {
    }
    row(t, "printed basis, xi=" + std::to_string(xi), "basis (4,5)", observed);
  }
  return t;
}

inline ReproTable repro_generic4() {
  ReproTable t{"generic4", "x1 x2 x3 (x1+x2+x3), all multiplicities in [1,3]", {}};
  const auto a = catalogue::generic4();
  const auto rep = totally_nonfree_scan(a, 3);
  row(t, "vectors decided", "81", std::to_string(rep.entries.size()));
  row(t, "not free", "81", std::to_string(rep.not_free_count));
  std::size_t verified = 0;
  for (const auto& e : rep.entries) {
    const auto c = decide_freeness(a.with_multiplicities(e.mults));
    if (check_certificate(certificate_to_json(c)).ok && c.verdict == Verdict::not_free) ++verified;
  }
  row(t, "witnesses re-verified", "81", std::to_string(verified));
  return t;
}

inline ReproTable repro_a3() {
  ReproTable t{"a3", "Type A3 multiplicities", {}};
  row(t, "m = [1,1,1,1,1,1]", "free (1,2,3)", format_cert(decide_freeness(catalogue::a3({1, 1, 1, 1, 1, 1}))));
  row(t, "m = [2,1,1,1,1,1]", "free (2,2,3)", format_cert(decide_freeness(catalogue::a3({2, 1, 1, 1, 1, 1}))));
  const auto c = decide_freeness(catalogue::a3({1, 1, 2, 2, 1, 1}));
  row(t, "m = [1,1,2,2,1,1]", "free", c.is_free() ? "free" : to_string(c.verdict));
  row(t, "m = [2,1,1,1,2,1]", "not_free", format_cert(decide_freeness(catalogue::a3({2, 1, 1, 1, 2, 1}))));
  const auto k = catalogue::a3({2, 1, 1, 1, 2, 1});
  const auto er = euler_restriction(k, catalogue::a3_index(k, 4));
  row(t, "m* on x2-x3 for [2,1,1,1,2,1]", "(2,2,2)", format_list(er.restriction.arrangement.mults()));
  const auto ex = rank2_exponents(er.restriction.arrangement);
  row(t, "exp of that restriction", "(3,3)", format_list({ex[0], ex[1]}));
  return t;
}

inline ReproTable repro_one_raised() {
  ReproTable t{"one-raised", "Raising one multiplicity of simple A3 and Boolean arrangements", {}};
  const auto a = catalogue::a3();
  for (std::size_t h = 0; h < a.size(); ++h)
    for (int m0 = 1; m0 <= 4; ++m0) {
      std::vector<int> m(a.size(), 1);
      m[h] = m0;
      const auto predicted = one_hyperplane_multiplicity(a, h, m0);
      row(t, "A3, " + a.form(h).to_string() + " mult " + std::to_string(m0), "free " + format_list(predicted),
          format_cert(decide_freeness(a.with_multiplicities(m))));
    }
  const auto b = catalogue::boolean(3);
  row(t, "Boolean l=3, x1 mult 4", "(1,1,4)", format_list(one_hyperplane_multiplicity(b, 0, 4)));
  return t;
}

inline ReproTable repro_corollary() {
  ReproTable t{"corollary-a3", "A3 closed-form exponents, entries in [1,3]", {}};
  std::vector<int> m(6, 1);
  int low = 0, high = 0;
  while (true) {
    if (catalogue::a3_closed_form_applies(m)) {
      const auto a = catalogue::a3(m);
      const auto formula = catalogue::a3_closed_form_exponents(m);
      const auto ss = supersolvable_exponents(a, catalogue::a3_filtration(a));
      const auto c = decide_freeness(a);
      (m[0] <= m[2] + m[3] - 1 ? low : high)++;
      const std::string obs = (ss ? format_list(*ss) : std::string("no claim")) + " / " + format_cert(c);
      row(t, "m = " + format_list(m), format_list(formula) + " / free " + format_list(formula), obs);
    }
    std::size_t i = 6;
    while (i > 0 && m[i - 1] == 3) m[--i] = 1;
    if (i == 0) break;
    ++m[i - 1];
  }
  row(t, "both branches exercised", "yes", low > 0 && high > 0 ? "yes" : "no");
  return t;
}

}  // namespace detail

/// Descriptive ids with the short numeric aliases accepted by the CLI.
inline const std::map<std::string, std::string>& reproduce_aliases() {
  static const std::map<std::string, std::string> m{
      {"pencil", "pencil"},         {"4.2", "pencil"},       {"generic4", "generic4"},
      {"5.4", "generic4"},          {"a3", "a3"},            {"5.5", "a3"},
      {"one-raised", "one-raised"}, {"5.2", "one-raised"},   {"corollary-a3", "corollary-a3"}};
  return m;
}

inline std::vector<std::string> reproduce_ids() { return {"pencil", "generic4", "a3", "one-raised", "corollary-a3"}; }

inline ReproTable reproduce(const std::string& id) {
  const auto& aliases = reproduce_aliases();
  auto it = aliases.find(id);
  if (it == aliases.end()) throw std::out_of_range("unknown example id '" + id + "'");
  const std::string& name = it->second;
  if (name == "pencil") return detail::repro_pencil();
  if (name == "generic4") return detail::repro_generic4();
  if (name == "a3") return detail::repro_a3();
  if (name == "one-raised") return detail::repro_one_raised();
  return detail::repro_corollary();
}

}  // namespace multiarr
