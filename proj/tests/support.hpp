#pragma once

// Conversions into the oracle's representation and seeded random
// generators shared by the test files.

#include <random>
#include <string>
#include <vector>

#include "multiarr/multiarr.hpp"
#include "oracle.hpp"

namespace support {

using multiarr::Rational;
using Arr = multiarr::Multiarrangement<Rational>;

inline oracle::Poly to_oracle(const multiarr::HPoly<Rational>& p) {
  oracle::Poly r;
  for (const auto& [e, c] : p.terms()) oracle::add_to(r, e, c);
  return r;
}

inline oracle::Derivation to_oracle(const multiarr::Derivation<Rational>& d) {
  oracle::Derivation r;
  for (std::size_t i = 0; i < d.dim(); ++i) r.push_back(to_oracle(d.component(i)));
  return r;
}

inline oracle::Arrangement to_oracle(const Arr& a) {
  oracle::Arrangement r;
  r.dim = a.dim();
  for (std::size_t i = 0; i < a.size(); ++i) {
    oracle::Form f;
    for (const auto& c : a.form(i).coeffs) f.push_back(oracle::Q(c));
    r.forms.push_back(f);
    r.mults.push_back(a.mult(i));
  }
  return r;
}

inline std::string data_path(const std::string& name) { return std::string(MULTIARR_DATA_DIR) + "/" + name; }

/// Random arrangement with `n` distinct hyperplanes in dimension `dim`,
/// integer coefficients in [-range, range], multiplicities in [1, max_mult]
/// with total at most `max_total` (0: unbounded). Retries until the forms
/// span the whole space when `essential` is set.
inline Arr random_arrangement(std::mt19937& rng, std::size_t dim, std::size_t n, int max_mult, int range = 3,
                              int max_total = 0, bool essential = true) {
  std::uniform_int_distribution<int> coef(-range, range), mult(1, max_mult);
  for (;;) {
    std::vector<std::pair<std::vector<multiarr::Integer>, int>> raw;
    int total = 0;
    while (raw.size() < n) {
      std::vector<multiarr::Integer> c(dim);
      bool nz = false;
      for (auto& x : c) {
        x = coef(rng);
        nz = nz || x != 0;
      }
      if (!nz) continue;
      int m = mult(rng);
      raw.emplace_back(c, m);
      total += m;
    }
    if (max_total && total > max_total) continue;
    auto a = Arr::normalize(dim, raw);
    if (a.size() != n) continue;
    if (essential && a.rank() != dim) continue;
    return a;
  }
}

}  // namespace support
