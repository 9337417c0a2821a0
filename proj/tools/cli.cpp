#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "lpcount/counting.hpp"
#include "lpcount/errors.hpp"
#include "lpcount/path_model.hpp"
#include "lpcount/symbolic.hpp"
#include "lpcount/verify.hpp"

namespace lpcount::cli {

namespace {

using json = nlohmann::ordered_json;

struct Config {
  std::string engine = "all";
  std::string format = "plain";
  std::size_t theorem_cap = kDefaultTheoremCap;
  std::uint64_t seed = 0;
  bool expand = false;
  bool count_only = false;
  bool count_terms = false;
  std::uint64_t max_lines = 100'000;
};

bool as_json(const Config& cfg) { return cfg.format == "json"; }

json path_json(const HeightPath& p) {
  return json{{"heights", std::vector<Coord>(p.begin(), p.end())}};
}

std::string bare(const HeightPath& p) {
  return p.empty() ? std::string("h:") : join_coords(p.values());
}

int cmd_count(const std::string& spec, const Config& cfg, std::ostream& out,
              std::ostream& err) {
  const HeightPath p = parse_path(spec);
  const EngineLimits limits{cfg.theorem_cap, kDefaultMonomialCap};

  if (cfg.engine != "all") {
    const Engine engine = *parse_engine(cfg.engine);
    const BigCount value = count(p, engine, limits);
    if (as_json(cfg)) {
      out << json{{"path", path_json(p)}, {"engine", cfg.engine}, {"count", value.get_str()}}
                 .dump()
          << '\n';
    } else {
      out << value.get_str() << '\n';
    }
    return kOk;
  }

  json results = json::array();
  std::optional<BigCount> agreed;
  bool agree = true;
  for (Engine e : kAllEngines) {
    const std::string name(engine_name(e));
    if (e == Engine::theorem && p.size() > cfg.theorem_cap) {
      results.push_back({{"engine", name}, {"skipped", "over cap " + std::to_string(cfg.theorem_cap)}});
      if (!as_json(cfg)) {
        out << name << "\tskipped (n = " << p.size() << " > cap " << cfg.theorem_cap << ")\n";
      }
      continue;
    }
    const BigCount value = count(p, e, limits);
    if (!agreed) {
      agreed = value;
    } else if (*agreed != value) {
      agree = false;
    }
    results.push_back({{"engine", name}, {"count", value.get_str()}});
    if (!as_json(cfg)) out << name << '\t' << value.get_str() << '\n';
  }

  if (as_json(cfg)) {
    json doc{{"path", path_json(p)}, {"engine", "all"}};
    if (agree) doc["count"] = agreed->get_str();
    doc["agree"] = agree;
    doc["engines"] = std::move(results);
    out << doc.dump() << '\n';
  } else if (agree) {
    out << agreed->get_str() << '\n';
  }
  if (!agree) {
    err << "engines disagree on " << to_string(p) << '\n';
    return kFailure;
  }
  return kOk;
}

int cmd_enumerate(const std::string& spec, const Config& cfg, std::ostream& out,
                  std::ostream& err) {
  const HeightPath p = parse_path(spec);
  const DiffVector v = delta(p);
  const BigCount total = count_recurrence(v);

  if (cfg.count_only) {
    if (as_json(cfg)) {
      out << json{{"path", path_json(p)}, {"count", total.get_str()}}.dump() << '\n';
    } else {
      out << total.get_str() << '\n';
    }
    return kOk;
  }
  if (total > BigCount(static_cast<unsigned long>(cfg.max_lines))) {
    err << "refusing to print " << total.get_str() << " paths (cap " << cfg.max_lines
        << "); use --count-only or raise --max-lines\n";
    return kCapacity;
  }

  json paths = json::array();
  for (const LatticePoint& x : enumerate_polytope(v)) {
    const HeightPath q = sigma(DiffVector(std::vector<Coord>(x.begin(), x.end())));
    if (as_json(cfg)) {
      paths.push_back(std::vector<Coord>(q.begin(), q.end()));
    } else {
      out << bare(q) << '\n';
    }
  }
  if (as_json(cfg)) {
    out << json{{"path", path_json(p)}, {"count", total.get_str()}, {"paths", std::move(paths)}}
               .dump()
        << '\n';
  }
  return kOk;
}

template <typename Terms>
json terms_json(const Terms& terms) {
  json arr = json::array();
  for (const auto& [exponents, coeff] : terms) {
    arr.push_back({{"coeff", to_fraction_string(coeff)},
                   {"exponents", std::vector<Coord>(exponents.begin(), exponents.end())}});
  }
  return arr;
}

int cmd_symbolic(std::size_t n, const Config& cfg, std::ostream& out, std::ostream&) {
  const RFPolynomial rf = symbolic_lp(n, cfg.theorem_cap);
  if (cfg.expand) {
    const MonomialPolynomial mono = expand(rf);
    if (cfg.count_terms) {
      out << mono.terms().size() << '\n';
    } else if (as_json(cfg)) {
      out << json{{"n", n}, {"basis", "monomial"}, {"terms", terms_json(mono.terms())}}.dump()
          << '\n';
    } else {
      out << serialize(mono);
    }
    return kOk;
  }

  if (cfg.count_terms) {
    out << rf.terms().size() << '\n';
  } else if (as_json(cfg)) {
    std::vector<std::pair<std::span<const Coord>, Rational>> rows;
    for (const RFTerm& t : rf.terms()) rows.emplace_back(t.exponents.values(), t.coeff);
    out << json{{"n", n}, {"basis", "rising-factorial"}, {"terms", terms_json(rows)}}.dump()
        << '\n';
  } else {
    out << serialize(rf);
  }
  return kOk;
}

int cmd_verify(const std::string& suite, const Config& cfg, std::ostream& out,
               std::ostream& err) {
  const VerifyOptions options{cfg.seed, cfg.theorem_cap};
  std::vector<SuiteResult> results;
  if (suite == "all") {
    results = run_all_suites(options);
  } else if (auto r = run_suite(suite, options)) {
    results.push_back(std::move(*r));
  } else {
    err << "unknown suite '" << suite << "'; known suites:";
    for (const auto& name : suite_names()) err << ' ' << name;
    err << " all\n";
    return kUsage;
  }

  bool all_passed = true;
  json suites = json::array();
  for (const SuiteResult& r : results) {
    all_passed = all_passed && r.passed;
    if (as_json(cfg)) {
      json entry{{"name", r.name}, {"passed", r.passed}, {"cases", r.cases}};
      if (!r.passed) entry["counterexample"] = r.counterexample;
      suites.push_back(std::move(entry));
    } else {
      out << (r.passed ? "PASS  " : "FAIL  ") << r.name << "  (" << r.cases << " cases)";
      if (!r.passed) out << "  counterexample: " << r.counterexample;
      out << '\n';
    }
  }
  if (as_json(cfg)) {
    out << json{{"seed", cfg.seed}, {"passed", all_passed}, {"suites", std::move(suites)}}.dump()
        << '\n';
  }
  return all_passed ? kOk : kFailure;
}

int cmd_probability(const std::string& spec, std::uint64_t n, std::uint64_t m,
                    const Config& cfg, std::ostream& out, std::ostream& err) {
  const HeightPath p = parse_path(spec);
  if (p.size() != n || (!p.empty() && p.back() > m)) {
    err << to_string(p) << " is not a path from (0,0) to (" << n << "," << m << ")\n";
    return kUsage;
  }
  const BigCount restricted = count_fixed_endpoint(p, m);
  const BigCount tallies = binom(BigCount(static_cast<unsigned long>(n + m)), n);
  const Rational probability = make_rational(restricted, tallies);
  if (as_json(cfg)) {
    out << json{{"path", path_json(p)},
                {"endpoint", {n, m}},
                {"restricted", restricted.get_str()},
                {"tallies", tallies.get_str()},
                {"probability", to_fraction_string(probability)}}
               .dump()
        << '\n';
  } else {
    out << probability.get_str() << '\n';
  }
  return kOk;
}

int cmd_bench(const Config& cfg, std::ostream& out, std::ostream&) {
  using clock = std::chrono::steady_clock;
  std::mt19937_64 rng(cfg.seed);
  json rows = json::array();
  if (!as_json(cfg)) out << "n\tengine\tseconds\tbits\n";

  for (std::size_t n : {20, 50, 100, 200}) {
    std::uniform_int_distribution<Coord> height(0, n);
    std::vector<Coord> h(n);
    for (Coord& x : h) x = height(rng);
    std::sort(h.begin(), h.end());
    const HeightPath p(h);

    for (Engine e : {Engine::determinant, Engine::triangular, Engine::recurrence, Engine::theorem}) {
      const std::string name(engine_name(e));
      if (e == Engine::theorem && n > cfg.theorem_cap) {
        if (as_json(cfg)) {
          rows.push_back({{"n", n}, {"engine", name}, {"refused", "over cap"}});
        } else {
          out << n << '\t' << name << "\trefused (over cap " << cfg.theorem_cap << ")\n";
        }
        continue;
      }
      const auto start = clock::now();
      const BigCount value = count(p, e, {cfg.theorem_cap, kDefaultMonomialCap});
      const double seconds = std::chrono::duration<double>(clock::now() - start).count();
      const std::size_t bits = mpz_sizeinbase(value.get_mpz_t(), 2);
      if (as_json(cfg)) {
        rows.push_back({{"n", n}, {"engine", name}, {"seconds", seconds}, {"bits", bits}});
      } else {
        out << n << '\t' << name << '\t' << seconds << '\t' << bits << '\n';
      }
    }
  }
  if (as_json(cfg)) out << json{{"seed", cfg.seed}, {"results", std::move(rows)}}.dump() << '\n';
  return kOk;
}

void add_format(CLI::App* cmd, Config& cfg) {
  cmd->add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"plain", "json"}));
}

void add_theorem_cap(CLI::App* cmd, Config& cfg) {
  cmd->add_option("--theorem-cap", cfg.theorem_cap,
                  "Largest n accepted by the theorem and symbolic engines")
      ->check(CLI::PositiveNumber);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact counts of lattice paths restricted by a given path", "lpcount"};
  app.require_subcommand(1);

  Config cfg;
  std::string path_spec;
  std::string suite;
  std::size_t symbolic_n = 0;
  std::uint64_t end_n = 0;
  std::uint64_t end_m = 0;

  auto* count_cmd = app.add_subcommand("count", "Count paths restricted by PATH");
  count_cmd->add_option("path", path_spec, "w:WORD, h:HEIGHTS or d:DIFFS")->required();
  count_cmd->add_option("--engine", cfg.engine, "Engine, or 'all' to cross-check")
      ->check(CLI::IsMember({"recurrence", "determinant", "triangular", "theorem", "dp", "all"}));
  add_format(count_cmd, cfg);
  add_theorem_cap(count_cmd, cfg);

  auto* enum_cmd = app.add_subcommand("enumerate", "List every path restricted by PATH");
  enum_cmd->add_option("path", path_spec, "w:WORD, h:HEIGHTS or d:DIFFS")->required();
  enum_cmd->add_flag("--count-only", cfg.count_only, "Print only the number of paths");
  enum_cmd->add_option("--max-lines", cfg.max_lines, "Refuse to print more paths than this");
  add_format(enum_cmd, cfg);

  auto* sym_cmd = app.add_subcommand("symbolic", "LP for length-n paths as a polynomial");
  sym_cmd->add_option("n", symbolic_n, "Path length")->required();
  sym_cmd->add_flag("--expand", cfg.expand, "Print the monomial basis instead");
  sym_cmd->add_flag("--count-terms", cfg.count_terms, "Print only the number of terms");
  add_format(sym_cmd, cfg);
  add_theorem_cap(sym_cmd, cfg);

  auto* verify_cmd = app.add_subcommand("verify", "Run invariant suites");
  verify_cmd->add_option("suite", suite, "Suite name or 'all'")->required();
  verify_cmd->add_option("--seed", cfg.seed, "Seed for randomized cases");
  add_format(verify_cmd, cfg);
  add_theorem_cap(verify_cmd, cfg);

  auto* prob_cmd = app.add_subcommand(
      "probability", "Chance that a uniformly random tally to (n,m) is restricted by PATH");
  prob_cmd->add_option("path", path_spec, "w:WORD, h:HEIGHTS or d:DIFFS")->required();
  prob_cmd->add_option("n", end_n, "Final x-coordinate")->required();
  prob_cmd->add_option("m", end_m, "Final y-coordinate")->required();
  add_format(prob_cmd, cfg);

  auto* bench_cmd = app.add_subcommand("bench", "Time the engines on random paths");
  bench_cmd->add_option("--seed", cfg.seed, "Seed for the random paths");
  add_format(bench_cmd, cfg);
  add_theorem_cap(bench_cmd, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (count_cmd->parsed()) return cmd_count(path_spec, cfg, out, err);
    if (enum_cmd->parsed()) return cmd_enumerate(path_spec, cfg, out, err);
    if (sym_cmd->parsed()) return cmd_symbolic(symbolic_n, cfg, out, err);
    if (verify_cmd->parsed()) return cmd_verify(suite, cfg, out, err);
    if (prob_cmd->parsed()) return cmd_probability(path_spec, end_n, end_m, cfg, out, err);
    if (bench_cmd->parsed()) return cmd_bench(cfg, out, err);
  } catch (const PathParseError& e) {
    err << "error: " << e.what() << " (token: '" << e.token() << "')\n";
    return kUsage;
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << '\n';
    return kCapacity;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace lpcount::cli
