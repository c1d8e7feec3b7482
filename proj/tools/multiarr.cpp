// multiarr: command-line front end.
//
//   multiarr euler --input FILE --hyperplane SEL
//   multiarr free --input FILE [--degree-bound N] [--out CERT]
//   multiarr ifm --input FILE [--budget N] [--out CERT]
//   multiarr scan --input FILE [--max-mult N]
//   multiarr reproduce ID|all
//   multiarr --check CERT
//
// Exit status: 0 free/success, 2 not free, 3 unknown, 64 usage, 65 data error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "multiarr/multiarr.hpp"

namespace {

using namespace multiarr;

constexpr int exit_ok = 0;
constexpr int exit_not_free = 2;
constexpr int exit_unknown = 3;
constexpr int exit_usage = 64;
constexpr int exit_data = 65;
constexpr int exit_mismatch = 1;

struct RunConfig {
  std::string input;
  std::string hyperplane;
  std::string mult;
  std::string out;
  std::string format = "text";
  std::string id;
  int degree_bound = -1;
  int max_mult = 3;
  std::size_t budget = 100000;
  bool verify = false;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool structured(const RunConfig& c) { return c.format == "structured"; }

ArrangementData load_input(const RunConfig& c) {
  if (c.input.empty()) throw UsageError("--input is required");
  auto d = load_arrangement(c.input);
  if (c.mult.empty()) return d;
  std::vector<int> m;
  std::stringstream ss(c.mult);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t pos = 0;
      m.push_back(std::stoi(tok, &pos));
      if (pos != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw FormatError("mult", "bad multiplicity '" + tok + "'");
    }
  }
  return d.with_multiplicities(m);
}

void write_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw FormatError(path, "cannot write file");
  out << j.dump(2) << '\n';
}

template <Field F>
int run_euler(const RunConfig& c, const ArrangementData& d) {
  if (c.hyperplane.empty()) throw UsageError("--hyperplane is required");
  const auto a = d.build<F>();
  const std::size_t h0 = resolve_hyperplane(d, a, c.hyperplane);
  EulerOptions opt;
  opt.cross_check = c.verify;
  opt.check_all_cases = c.verify;
  const auto er = euler_restriction(a, h0, opt);
  const auto& r = er.restriction.arrangement;
  if (structured(c)) {
    json flats = json::array();
    for (std::size_t i = 0; i < er.reports.size(); ++i) {
      const auto& rep = er.reports[i];
      json forms = json::array();
      for (std::size_t h : rep.flat.hyperplanes) forms.push_back(a.form(h).to_string());
      flats.push_back({{"restricted_form", r.form(i).to_string()},
                       {"localization", forms},
                       {"k", rep.k},
                       {"m0", rep.m0},
                       {"m1", rep.m1},
                       {"total", rep.total},
                       {"method", to_string(rep.method)},
                       {"euler_multiplicity", rep.value}});
    }
    std::cout << json{{"hyperplane", a.form(h0).to_string()},
                      {"flats", flats},
                      {"restriction", arrangement_to_json(r)},
                      {"total", er.total_star}}
                     .dump(2)
              << '\n';
    return exit_ok;
  }
  std::cout << "H0: " << a.form(h0).to_string() << " (multiplicity " << a.mult(h0) << ")\n";
  for (std::size_t i = 0; i < er.reports.size(); ++i) {
    const auto& rep = er.reports[i];
    std::cout << "  X = H0 & {";
    for (std::size_t j = 0; j < rep.flat.hyperplanes.size(); ++j)
      std::cout << (j ? ", " : "") << a.form(rep.flat.hyperplanes[j]).to_string();
    std::cout << "}: k=" << rep.k << " m0=" << rep.m0 << " m1=" << rep.m1 << " |m_X|=" << rep.total
              << " method=" << to_string(rep.method) << " m*=" << rep.value << '\n';
  }
  std::cout << "restriction: " << r.to_string() << '\n';
  std::cout << "m*: " << format_list(r.mults()) << "  |m*| = " << er.total_star << '\n';
  return exit_ok;
}

int verdict_status(Verdict v) {
  switch (v) {
    case Verdict::free: return exit_ok;
    case Verdict::not_free: return exit_not_free;
    case Verdict::unknown: return exit_unknown;
  }
  return exit_unknown;
}

template <Field F>
int run_free(const RunConfig& c, const ArrangementData& d) {
  const auto a = d.build<F>();
  DecideOptions opt;
  opt.degree_bound = c.degree_bound;
  const auto cert = decide_freeness(a, opt);
  const json j = certificate_to_json(cert);
  if (c.verify) {
    const auto chk = check_certificate(j);
    if (!chk.ok) {
      std::cerr << "error: emitted certificate failed re-verification: " << chk.message << '\n';
      return exit_mismatch;
    }
  }
  if (!c.out.empty()) write_file(c.out, j);
  if (structured(c)) {
    std::cout << j.dump(2) << '\n';
    return verdict_status(cert.verdict);
  }
  std::cout << "arrangement: " << a.to_string() << '\n';
  std::cout << "verdict: " << to_string(cert.verdict) << '\n';
  if (cert.is_free()) {
    std::cout << "exponents: " << format_list(cert.exponents) << '\n';
    for (std::size_t i = 0; i < cert.basis.size(); ++i)
      std::cout << "  theta" << i + 1 << " = " << cert.basis[i].to_string() << '\n';
    std::cout << "det = " << field_traits<F>::to_string(*cert.scalar) << " * Q\n";
  } else if (const auto* h = std::get_if<HilbertMismatch>(&cert.witness)) {
    std::cout << "witness: no exponent multiset matches dim D_d for d <= " << h->degree << "; dims";
    for (auto x : h->dims) std::cout << ' ' << x;
    std::cout << '\n';
  } else if (const auto* g = std::get_if<GeneratorOverflow>(&cert.witness)) {
    std::cout << "witness: minimal generators in degrees";
    for (auto x : g->degrees) std::cout << ' ' << x;
    std::cout << '\n';
  } else {
    std::cout << "degree bound " << cert.degree_bound << " reached\n";
  }
  if (c.verify) std::cout << "certificate re-verified\n";
  return verdict_status(cert.verdict);
}

template <Field F>
void print_tree(const IFMNode<F>& n, int depth) {
  std::cout << std::string(2 * depth, ' ') << '[' << to_string(n.kind) << "] " << n.arrangement.to_string()
            << "  exp " << format_list(n.exponents);
  if (n.kind == IFMKind::addition) std::cout << "  H0 = " << n.arrangement.form(n.host).to_string();
  std::cout << '\n';
  if (n.deletion) print_tree(*n.deletion, depth + 1);
  if (n.restriction) print_tree(*n.restriction, depth + 1);
}

template <Field F>
int run_ifm(const RunConfig& c, const ArrangementData& d) {
  const auto a = d.build<F>();
  const auto r = inductively_free(a, c.budget);
  const json j = ifm_to_json(r, a);
  if (c.verify) {
    const auto chk = check_certificate(j);
    bool agree = chk.ok;
    if (agree && r.tree) {
      const auto cert = decide_freeness(a);
      agree = cert.is_free() && cert.exponents == r.tree->exponents;
    }
    if (!agree) {
      std::cerr << "error: inductive freeness tree failed re-verification: " << chk.message << '\n';
      return exit_mismatch;
    }
  }
  if (!c.out.empty()) write_file(c.out, j);
  const int status = r.tree ? exit_ok : (r.exhaustive ? exit_not_free : exit_unknown);
  if (structured(c)) {
    std::cout << j.dump(2) << '\n';
    return status;
  }
  if (r.tree) {
    std::cout << "inductively free, exponents " << format_list(r.tree->exponents) << '\n';
    print_tree(*r.tree, 1);
  } else if (r.exhaustive) {
    std::cout << "no inductive freeness tree (exhaustive search)\n";
  } else {
    std::cout << "search budget of " << c.budget << " nodes exhausted\n";
  }
  std::cout << "nodes expanded: " << r.expanded << '\n';
  return status;
}

template <Field F>
int run_scan(const RunConfig& c, const ArrangementData& d) {
  const auto a = d.build<F>();
  DecideOptions opt;
  opt.degree_bound = c.degree_bound;
  const auto rep = totally_nonfree_scan(a, c.max_mult, {}, opt);
  if (structured(c)) {
    json entries = json::array();
    for (const auto& e : rep.entries)
      entries.push_back({{"mult", e.mults}, {"verdict", to_string(e.verdict)}, {"exponents", e.exponents}});
    std::cout << json{{"arrangement", arrangement_to_json(a)},
                      {"max_mult", c.max_mult},
                      {"entries", entries},
                      {"free", rep.free_count},
                      {"not_free", rep.not_free_count},
                      {"unknown", rep.unknown_count},
                      {"totally_free", rep.totally_free()},
                      {"totally_non_free", rep.totally_non_free()}}
                     .dump(2)
              << '\n';
    return exit_ok;
  }
  std::cout << "arrangement: " << a.to_string() << '\n';
  for (const auto& e : rep.entries) {
    std::cout << "  " << format_list(e.mults) << ": " << to_string(e.verdict);
    if (e.verdict == Verdict::free) std::cout << ' ' << format_list(e.exponents);
    std::cout << '\n';
  }
  std::cout << rep.entries.size() << " vectors: " << rep.free_count << " free, " << rep.not_free_count
            << " not free, " << rep.unknown_count << " unknown\n";
  if (rep.totally_non_free()) std::cout << "not free for every multiplicity with entries <= " << c.max_mult << '\n';
  if (rep.totally_free()) std::cout << "free for every multiplicity with entries <= " << c.max_mult << '\n';
  return exit_ok;
}

int run_reproduce(const RunConfig& c) {
  std::vector<std::string> ids;
  if (c.id == "all")
    ids = reproduce_ids();
  else
    ids.push_back(c.id);
  bool all = true;
  json out = json::array();
  for (const auto& id : ids) {
    ReproTable t;
    try {
      t = reproduce(id);
    } catch (const std::out_of_range& e) {
      throw UsageError(e.what());
    }
    all = all && t.passed();
    if (structured(c)) {
      json rows = json::array();
      for (const auto& r : t.rows)
        rows.push_back({{"claim", r.claim}, {"expected", r.expected}, {"observed", r.observed}, {"pass", r.pass}});
      out.push_back({{"id", t.id}, {"title", t.title}, {"rows", rows}, {"pass", t.passed()}});
      continue;
    }
    std::cout << t.id << ": " << t.title << '\n';
    for (const auto& r : t.rows) {
      std::cout << "  " << (r.pass ? "PASS" : "FAIL") << "  " << r.claim << "  expected " << r.expected;
      if (!r.pass) std::cout << "  observed " << r.observed;
      std::cout << '\n';
    }
    std::cout << "  " << (t.passed() ? "all rows match" : "MISMATCH") << "\n";
  }
  if (structured(c)) std::cout << out.dump(2) << '\n';
  return all ? exit_ok : exit_mismatch;
}

int run_check(const std::string& path, const std::string& format) {
  const auto res = check_certificate_text(io::read_file(path));
  if (format == "structured") {
    std::cout << json{{"ok", res.ok}, {"kind", res.kind}, {"verdict", res.verdict}, {"message", res.message}}.dump(2)
              << '\n';
  } else if (res.ok) {
    std::cout << "certificate ok: " << res.kind << ", " << res.verdict << '\n';
  } else {
    std::cout << "certificate rejected: " << res.message << '\n';
  }
  return res.ok ? exit_ok : exit_data;
}

template <class Run>
int dispatch(const RunConfig& c, Run&& run) {
  const auto d = load_input(c);
  return with_field(d.field, [&](auto tag) { return run(tag, d); });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with hyperplane multiarrangements"};
  app.require_subcommand(0, 1);
  RunConfig cfg;
  std::string check;
  app.add_option("--check", check, "Verify a certificate file (no search)");
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "structured"}));

  auto input_options = [&](CLI::App* sub) {
    sub->add_option("--input", cfg.input, "Arrangement file")->required();
    sub->add_option("--mult", cfg.mult, "Comma-separated multiplicities overriding the file (input order)");
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "structured"}));
    sub->add_flag("--verify", cfg.verify, "Re-derive results with an independent check");
  };
  auto* euler = app.add_subcommand("euler", "Euler multiplicities of the restriction to a hyperplane");
  input_options(euler);
  euler->add_option("--hyperplane", cfg.hyperplane, "Input index or coefficients \"a,b,c\"")->required();
  auto* free = app.add_subcommand("free", "Decide freeness and emit a certificate");
  input_options(free);
  free->add_option("--degree-bound", cfg.degree_bound, "Highest degree scanned (default |m|)");
  free->add_option("--out", cfg.out, "Certificate output file");
  auto* ifm = app.add_subcommand("ifm", "Search for an inductive freeness tree");
  input_options(ifm);
  ifm->add_option("--budget", cfg.budget, "Maximum number of expanded nodes");
  ifm->add_option("--out", cfg.out, "Certificate output file");
  auto* scan = app.add_subcommand("scan", "Decide every multiplicity vector with entries in [1, max-mult]");
  input_options(scan);
  scan->add_option("--max-mult", cfg.max_mult, "Largest multiplicity")->check(CLI::PositiveNumber);
  scan->add_option("--degree-bound", cfg.degree_bound, "Highest degree scanned (default |m|)");
  auto* repro = app.add_subcommand("reproduce", "Compare bundled examples with their stated values");
  repro->add_option("id", cfg.id, "Example id or 'all'")->required();
  repro->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "structured"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (!check.empty()) {
      if (!app.get_subcommands().empty()) throw UsageError("--check takes no subcommand");
      return run_check(check, cfg.format);
    }
    if (euler->parsed())
      return dispatch(cfg, [&](auto tag, const ArrangementData& d) {
        return run_euler<typename decltype(tag)::type>(cfg, d);
      });
    if (free->parsed())
      return dispatch(cfg, [&](auto tag, const ArrangementData& d) {
        return run_free<typename decltype(tag)::type>(cfg, d);
      });
    if (ifm->parsed())
      return dispatch(cfg, [&](auto tag, const ArrangementData& d) {
        return run_ifm<typename decltype(tag)::type>(cfg, d);
      });
    if (scan->parsed())
      return dispatch(cfg, [&](auto tag, const ArrangementData& d) {
        return run_scan<typename decltype(tag)::type>(cfg, d);
      });
    if (repro->parsed()) return run_reproduce(cfg);
    std::cerr << app.help();
    return exit_usage;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return exit_usage;
  } catch (const FormatError& e) {
    std::cerr << "data error: " << e.what() << '\n';
    return exit_data;
  } catch (const ArrangementError& e) {
    std::cerr << "data error: " << e.what() << '\n';
    return exit_data;
  }
}
