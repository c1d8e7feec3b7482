#pragma once

// Arrangement files (JSON):
//   {"dim": 3, "field": "rational",
//    "hyperplanes": [{"coeffs": [1, -1, 0], "mult": 2}, ...]}
// "field" is optional ("rational" by default) or "gf(p)". Coefficients are
// exact integers, given as JSON integers or decimal strings.

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "multiarr/arrangement.hpp"
#include "multiarr/field.hpp"

namespace multiarr {

using json = nlohmann::json;

/// Malformed input; `path` locates the offending field (e.g.
/// "hyperplanes[2].coeffs[0]").
class FormatError : public std::runtime_error {
 public:
  FormatError(const std::string& path, const std::string& msg)
      : std::runtime_error(path.empty() ? msg : path + ": " + msg), path(path) {}
  std::string path;
};

namespace io {

inline std::string join(const std::string& base, const std::string& key) { return base.empty() ? key : base + "." + key; }
inline std::string index(const std::string& base, std::size_t i) { return base + "[" + std::to_string(i) + "]"; }

inline const json& member(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) throw FormatError(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw FormatError(join(path, key), "missing field");
  return *it;
}

inline const json& array(const json& v, const std::string& path) {
  if (!v.is_array()) throw FormatError(path, "expected an array");
  return v;
}

inline Integer integer(const json& v, const std::string& path) {
  if (v.is_number_integer()) {
    if (v.is_number_unsigned()) return Integer(std::to_string(v.get<unsigned long long>()));
    return Integer(std::to_string(v.get<long long>()));
  }
  if (v.is_string()) {
    Integer z;
    const auto s = v.get<std::string>();
    if (s.empty() || z.set_str(s, 10) != 0) throw FormatError(path, "not an integer: '" + s + "'");
    return z;
  }
  throw FormatError(path, "expected an exact integer");
}

inline long long small_int(const json& v, const std::string& path) {
  if (!v.is_number_integer()) throw FormatError(path, "expected an integer");
  return v.get<long long>();
}

/// JSON value for an integer: a number when it fits, a string otherwise.
inline json integer_value(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

inline json parse_text(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(what, e.what());
  }
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError(path, "cannot open file");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace io

/// Field-independent contents of an arrangement file.
struct ArrangementData {
  std::size_t dim = 0;
  std::string field = "rational";
  std::vector<std::pair<std::vector<Integer>, int>> hyperplanes;  // input order

  template <Field F>
  Multiarrangement<F> build() const {
    try {
      return Multiarrangement<F>::normalize(dim, hyperplanes);
    } catch (const ArrangementError& e) {
      throw FormatError("hyperplanes", e.what());
    }
  }

  /// Same data with multiplicities replaced (input order).
  ArrangementData with_multiplicities(const std::vector<int>& m) const {
    if (m.size() != hyperplanes.size()) throw FormatError("mult", "expected " + std::to_string(hyperplanes.size()) + " multiplicities");
    ArrangementData d = *this;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] < 1) throw FormatError(io::index("mult", i), "multiplicity must be positive");
      d.hyperplanes[i].second = m[i];
    }
    return d;
  }
};

inline ArrangementData arrangement_from_json(const json& j, const std::string& path = "") {
  ArrangementData d;
  const long long dim = io::small_int(io::member(j, "dim", path), io::join(path, "dim"));
  if (dim < 1) throw FormatError(io::join(path, "dim"), "dimension must be positive");
  d.dim = static_cast<std::size_t>(dim);
  if (j.contains("field")) {
    const auto& f = j.at("field");
    if (!f.is_string()) throw FormatError(io::join(path, "field"), "expected a string");
    d.field = f.get<std::string>();
  }
  const std::string hp = io::join(path, "hyperplanes");
  const auto& list = io::array(io::member(j, "hyperplanes", path), hp);
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string p = io::index(hp, i);
    const auto& coeffs = io::array(io::member(list[i], "coeffs", p), io::join(p, "coeffs"));
    if (coeffs.size() != d.dim)
      throw FormatError(io::join(p, "coeffs"), "expected " + std::to_string(d.dim) + " coefficients");
    std::vector<Integer> c;
    bool nonzero = false;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      c.push_back(io::integer(coeffs[k], io::index(io::join(p, "coeffs"), k)));
      nonzero = nonzero || c.back() != 0;
    }
    if (!nonzero) throw FormatError(io::join(p, "coeffs"), "zero linear form");
    int mult = 1;
    if (list[i].contains("mult")) {
      const long long m = io::small_int(list[i].at("mult"), io::join(p, "mult"));
      if (m < 1 || m > 1000000) throw FormatError(io::join(p, "mult"), "multiplicity must be a positive integer");
      mult = static_cast<int>(m);
    }
    d.hyperplanes.emplace_back(std::move(c), mult);
  }
  return d;
}

inline ArrangementData parse_arrangement(const std::string& text, const std::string& source = "input") {
  return arrangement_from_json(io::parse_text(text, source));
}

inline ArrangementData load_arrangement(const std::string& path) {
  return parse_arrangement(io::read_file(path), path);
}

template <Field F>
json arrangement_to_json(const Multiarrangement<F>& a) {
  json hs = json::array();
  for (std::size_t i = 0; i < a.size(); ++i) {
    json coeffs = json::array();
    for (const auto& c : a.form(i).coeffs) coeffs.push_back(io::integer_value(c));
    hs.push_back({{"coeffs", coeffs}, {"mult", a.mult(i)}});
  }
  return {{"dim", a.dim()}, {"field", field_traits<F>::name()}, {"hyperplanes", hs}};
}

// Supported fields. Prime fields are fixed at compile time.
using GF2 = ModP<2>;
using GF3 = ModP<3>;
using GF5 = ModP<5>;
using GF7 = ModP<7>;
using GF32003 = ModP<32003>;

inline const std::vector<std::string>& supported_fields() {
  static const std::vector<std::string> names{"rational", "gf(2)", "gf(3)", "gf(5)", "gf(7)", "gf(32003)"};
  return names;
}

/// Calls fn(std::type_identity<F>{}) for the field named `name`.
template <class Fn>
decltype(auto) with_field(const std::string& name, Fn&& fn) {
  if (name == "rational") return fn(std::type_identity<Rational>{});
  if (name == "gf(2)") return fn(std::type_identity<GF2>{});
  if (name == "gf(3)") return fn(std::type_identity<GF3>{});
  if (name == "gf(5)") return fn(std::type_identity<GF5>{});
  if (name == "gf(7)") return fn(std::type_identity<GF7>{});
  if (name == "gf(32003)") return fn(std::type_identity<GF32003>{});
  throw FormatError("field", "unsupported field '" + name + "'");
}

/// Hyperplane selector: an input-order index ("3") or a coefficient list
/// ("1,-1,0"). Returns the index in the normalized arrangement.
template <Field F>
std::size_t resolve_hyperplane(const ArrangementData& d, const Multiarrangement<F>& a, const std::string& sel) {
  if (sel.find(',') == std::string::npos) {
    std::size_t pos = 0;
    long long idx = -1;
    try {
      idx = std::stoll(sel, &pos);
    } catch (const std::exception&) {
      throw FormatError("hyperplane", "not an index or coefficient list: '" + sel + "'");
    }
    if (pos != sel.size() || idx < 0 || static_cast<std::size_t>(idx) >= d.hyperplanes.size())
      throw FormatError("hyperplane", "index out of range: '" + sel + "'");
    return a.index_of(d.hyperplanes[static_cast<std::size_t>(idx)].first);
  }
  std::vector<Integer> c;
  std::stringstream ss(sel);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    const auto b = tok.find_first_not_of(" \t");
    const auto e = tok.find_last_not_of(" \t");
    Integer z;
    if (b == std::string::npos || z.set_str(tok.substr(b, e - b + 1), 10) != 0)
      throw FormatError("hyperplane", "bad coefficient '" + tok + "'");
    c.push_back(z);
  }
  if (c.size() != a.dim()) throw FormatError("hyperplane", "expected " + std::to_string(a.dim()) + " coefficients");
  try {
    return a.index_of(c);
  } catch (const ArrangementError& e) {
    throw FormatError("hyperplane", e.what());
  }
}

}  // namespace multiarr
