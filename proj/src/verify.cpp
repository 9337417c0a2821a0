#include "lpcount/verify.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "lpcount/counting.hpp"
#include "lpcount/identities.hpp"
#include "lpcount/symbolic.hpp"

namespace lpcount {

namespace {

class Check {
public:
  explicit Check(std::string name) { result_.name = std::move(name); }

  // Records one case; keeps only the first failure.
  bool expect(bool ok, const std::function<std::string()>& describe) {
    ++result_.cases;
    if (!ok && result_.passed) {
      result_.passed = false;
      result_.counterexample = describe();
    }
    return ok;
  }

  bool failed() const { return !result_.passed; }
  SuiteResult take() { return std::move(result_); }

private:
  SuiteResult result_;
};

HeightPath staircase(std::size_t n, Coord start) {
  std::vector<Coord> h(n);
  for (std::size_t i = 0; i < n; ++i) h[i] = start + i;
  return HeightPath(std::move(h));
}

HeightPath random_path(std::mt19937_64& rng, std::size_t n, Coord max_height) {
  std::uniform_int_distribution<Coord> height(0, max_height);
  std::vector<Coord> h(n);
  for (Coord& x : h) x = height(rng);
  std::sort(h.begin(), h.end());
  return HeightPath(std::move(h));
}

DiffVector ones(std::size_t n) { return DiffVector(std::vector<Coord>(n, 1)); }

void compare_engines(Check& check, const HeightPath& p, const VerifyOptions& opt) {
  const BigCount reference = dp_oracle(p);
  EngineLimits limits{opt.theorem_cap, kDefaultMonomialCap};
  for (Engine e : kAllEngines) {
    if (e == Engine::theorem && p.size() > opt.theorem_cap) continue;
    const BigCount value = count(p, e, limits);
    check.expect(value == reference, [&] {
      return to_string(p) + ": " + std::string(engine_name(e)) + " = " + value.get_str() +
             ", dp = " + reference.get_str();
    });
  }
}

SuiteResult cross_engine(const VerifyOptions& opt) {
  Check check("cross-engine");
  for (std::size_t n = 0; n <= 5; ++n) {
    for (const HeightPath& p : all_paths(n, 5)) compare_engines(check, p, opt);
  }
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<std::size_t> length(0, 12);
  for (int t = 0; t < 200; ++t) compare_engines(check, random_path(rng, length(rng), 40), opt);
  return check.take();
}

SuiteResult ballot(const VerifyOptions& opt) {
  Check check("ballot");
  EngineLimits limits{opt.theorem_cap, kDefaultMonomialCap};
  for (std::size_t n = 0; n <= 12; ++n) {
    const HeightPath p = staircase(n, 1);
    for (Engine e : kAllEngines) {
      if (e == Engine::theorem && n > opt.theorem_cap) continue;
      check.expect(count(p, e, limits) == catalan(n + 1), [&] {
        return to_string(p) + " via " + std::string(engine_name(e));
      });
    }
    check.expect(dp_oracle(staircase(n, 0)) == catalan(n),
                 [&] { return to_string(staircase(n, 0)) + " via dp"; });
  }
  for (std::uint64_t n = 1; n <= 15; ++n) {
    BigCount sum = 0;
    for (std::uint64_t i = 1; i <= n; ++i) sum += catalan(i - 1) * catalan(n - i);
    check.expect(sum == catalan(n), [&] { return "Catalan recurrence at n = " + std::to_string(n); });
  }
  return check.take();
}

SuiteResult rectangle(const VerifyOptions& opt) {
  Check check("rectangle");
  EngineLimits limits{opt.theorem_cap, kDefaultMonomialCap};
  for (std::size_t n = 0; n <= 10; ++n) {
    for (Coord m = 0; m <= 10; ++m) {
      const HeightPath p(std::vector<Coord>(n, m));
      const BigCount expected = binom(static_cast<std::int64_t>(m + n), static_cast<std::int64_t>(n));
      for (Engine e : kAllEngines) {
        if (e == Engine::theorem && n > opt.theorem_cap) continue;
        check.expect(count(p, e, limits) == expected,
                     [&] { return to_string(p) + " via " + std::string(engine_name(e)); });
      }
    }
  }
  return check.take();
}

SuiteResult polytope(const VerifyOptions&) {
  Check check("polytope");
  for (std::size_t n = 0; n <= 12; ++n) {
    const DiffVector v = ones(n);
    std::uint64_t points = 0;
    std::optional<LatticePoint> previous;
    bool ok = true;
    for (const LatticePoint& x : enumerate_polytope(v)) {
      ++points;
      if (!in_polytope(x, v) || (previous && !(*previous < x))) ok = false;
      previous = x;
    }
    check.expect(ok && BigCount(static_cast<unsigned long>(points)) == catalan(n + 1),
                 [&] { return "all-ones polytope, n = " + std::to_string(n); });
  }
  return check.take();
}

SuiteResult bijection(const VerifyOptions&) {
  Check check("bijection");
  for (std::size_t n = 0; n <= 4; ++n) {
    const auto candidates = all_paths(n, 4);
    for (const HeightPath& p : candidates) {
      std::uint64_t restricted = 0;
      for (const HeightPath& q : candidates) {
        const bool below = is_restricted_by(q, p);
        if (below) ++restricted;
        const DiffVector dq = delta(q);
        const LatticePoint x(std::vector<Coord>(dq.begin(), dq.end()));
        check.expect(below == in_polytope(x, delta(p)),
                     [&] { return to_string(q) + " vs " + to_string(p); });
      }
      check.expect(BigCount(static_cast<unsigned long>(restricted)) == count_recurrence(delta(p)),
                   [&] { return "restricted count of " + to_string(p); });
    }
  }
  return check.take();
}

SuiteResult macmahon(const VerifyOptions&) {
  Check check("macmahon");
  for (std::uint64_t n = 0; n <= 5; ++n) {
    for (std::uint64_t m = 0; m <= 5; ++m) {
      check.expect(macmahon_bruteforce(n, m) == macmahon_total(n, m), [&] {
        return "(n, m) = (" + std::to_string(n) + ", " + std::to_string(m) + ")";
      });
    }
  }
  return check.take();
}

SuiteResult monomial(const VerifyOptions&) {
  Check check("monomial");
  for (std::size_t n = 0; n <= 4; ++n) {
    for (const HeightPath& p : all_paths(n, 4)) {
      std::uint64_t terms = 1;
      for (Coord h : p) terms *= h + 1;
      if (terms > 10'000) continue;
      check.expect(monomial_oracle(p) == dp_oracle(p), [&] { return to_string(p); });
    }
  }
  return check.take();
}

SuiteResult symbolic(const VerifyOptions& opt) {
  Check check("symbolic");
  for (std::size_t n = 0; n <= 10; ++n) {
    const RFPolynomial rf = symbolic_lp(n, std::max(n, opt.theorem_cap));
    check.expect(BigCount(static_cast<unsigned long>(rf.terms().size())) == catalan(n + 1),
                 [&] { return "term count at n = " + std::to_string(n); });
  }
  for (std::size_t n = 0; n <= 4; ++n) {
    const RFPolynomial rf = symbolic_lp(n);
    const MonomialPolynomial mono = expand(rf);
    for (const HeightPath& p : all_paths(n, 3 * n)) {
      const DiffVector v = delta(p);
      if (std::any_of(v.begin(), v.end(), [](Coord x) { return x > 3; })) continue;
      const Rational value = evaluate(rf, v);
      check.expect(value == Rational(count_recurrence(v)) && evaluate(mono, v) == value,
                   [&] { return "evaluation at " + to_string(v); });
    }
  }
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<std::size_t> length(0, 6);
  std::uniform_int_distribution<Coord> entry(0, 20);
  for (int t = 0; t < 100; ++t) {
    std::vector<Coord> raw(length(rng));
    for (Coord& x : raw) x = entry(rng);
    const DiffVector v(raw);
    check.expect(evaluate(symbolic_lp(v.size()), v) == Rational(count_recurrence(v)),
                 [&] { return "evaluation at " + to_string(v); });
  }
  return check.take();
}

SuiteResult det_identity(const VerifyOptions& opt) {
  Check check("det-identity");
  for (std::size_t n = 0; n <= 6; ++n) {
    check.expect(verify_det_identity(n, 100, opt.seed + n),
                 [&] { return "random points, n = " + std::to_string(n); });
  }
  for (std::size_t n = 0; n <= 3; ++n) {
    check.expect(verify_det_identity_grid(n), [&] { return "grid, n = " + std::to_string(n); });
  }
  return check.take();
}

SuiteResult lemma(const VerifyOptions&) {
  Check check("lemma");
  for (std::uint64_t a = 0; a <= 20; ++a) {
    for (std::uint64_t b = 0; b <= 20; ++b) {
      for (std::uint64_t c = 0; c <= 20; ++c) {
        const BigCount closed = lemma_closed(a, b, c);
        check.expect(lemma_lhs(a, b, c) == closed && lemma_rhs(a, b, c) == closed, [&] {
          return "(a, b, c) = (" + std::to_string(a) + ", " + std::to_string(b) + ", " +
                 std::to_string(c) + ")";
        });
      }
    }
  }
  return check.take();
}

SuiteResult vandermonde(const VerifyOptions&) {
  Check check("vandermonde");
  for (std::uint64_t d = 0; d <= 20; ++d) {
    for (std::uint64_t e = 0; e <= 20; ++e) {
      for (std::uint64_t f = 0; f <= e + 1; ++f) {
        auto [lhs, rhs] = vandermonde_gen(d, e, f);
        check.expect(lhs == rhs, [&] {
          return "(d, e, f) = (" + std::to_string(d) + ", " + std::to_string(e) + ", " +
                 std::to_string(f) + ")";
        });
      }
    }
  }
  return check.take();
}

SuiteResult telescoping(const VerifyOptions&) {
  Check check("telescoping");
  for (std::uint64_t a = 0; a <= 20; ++a) {
    for (std::uint64_t b = 0; b <= 20; ++b) {
      for (std::uint64_t c = 0; c <= 20; ++c) {
        check.expect(lemma_telescoped(a, b, c) == lemma_closed(a, b, c), [&] {
          return "(a, b, c) = (" + std::to_string(a) + ", " + std::to_string(b) + ", " +
                 std::to_string(c) + ")";
        });
      }
    }
  }
  return check.take();
}

SuiteResult children_suite(const VerifyOptions&) {
  Check check("children");
  // Length-1 points all have the empty parent.
  for (const LatticePoint& x : enumerate_polytope(ones(1))) {
    check.expect(parent(x).empty(), [&] { return "parent of " + to_string(x); });
  }
  for (std::size_t n = 2; n <= 8; ++n) {
    std::set<LatticePoint> covered;
    bool disjoint = true;
    bool inside = true;
    for (const LatticePoint& y : enumerate_polytope(ones(n - 1))) {
      for (const LatticePoint& x : children(y).children) {
        if (!covered.insert(x).second) disjoint = false;
        if (!in_polytope(x, ones(n))) inside = false;
        check.expect(parent(x) == y, [&] { return "parent of " + to_string(x); });
      }
    }
    std::set<LatticePoint> all;
    for (const LatticePoint& x : enumerate_polytope(ones(n))) all.insert(x);
    check.expect(disjoint && inside && covered == all,
                 [&] { return "partition at n = " + std::to_string(n); });
  }
  // parent(child) = y on the box of entries <= 6, length <= 6.
  for (std::size_t len = 1; len <= 6; ++len) {
    std::vector<Coord> y(len, 0);
    while (true) {
      const LatticePoint point(y);
      for (const LatticePoint& x : children(point).children) {
        check.expect(parent(x) == point, [&] { return "parent of " + to_string(x); });
      }
      std::size_t k = len;
      while (k > 0 && y[k - 1] == 6) y[--k] = 0;
      if (k == 0) break;
      ++y[k - 1];
    }
  }
  return check.take();
}

SuiteResult reduced_step(const VerifyOptions&) {
  Check check("reduced-step");
  for (std::uint64_t v1 = 0; v1 <= 6; ++v1) {
    for (std::uint64_t v2 = 0; v2 <= 6; ++v2) {
      for (std::uint64_t c = 0; c <= 6; ++c) {
        check.expect(children_weight_sum(v1, v2, c) == recurrence_weight_sum(v1, v2, c), [&] {
          return "(v1, v2, y) = (" + std::to_string(v1) + ", " + std::to_string(v2) + ", " +
                 std::to_string(c) + ")";
        });
      }
    }
  }
  return check.take();
}

SuiteResult memo(const VerifyOptions& opt) {
  Check check("memo");
  MemoTable table;
  std::mt19937_64 rng(opt.seed);
  for (int t = 0; t < 40; ++t) count_recurrence(delta(random_path(rng, 8, 12)), table);
  std::bernoulli_distribution sample(0.05);
  for (const auto& [key, value] : table.entries()) {
    if (!sample(rng)) continue;
    const DiffVector v(key);
    check.expect(value == dp_oracle(sigma(v)), [&] { return "memo entry " + to_string(v); });
  }
  return check.take();
}

using SuiteFn = SuiteResult (*)(const VerifyOptions&);

const std::map<std::string, SuiteFn, std::less<>>& registry() {
  static const std::map<std::string, SuiteFn, std::less<>> suites{
      {"cross-engine", cross_engine}, {"ballot", ballot},
      {"rectangle", rectangle},       {"polytope", polytope},
      {"bijection", bijection},       {"macmahon", macmahon},
      {"monomial", monomial},         {"symbolic", symbolic},
      {"det-identity", det_identity}, {"lemma", lemma},
      {"vandermonde", vandermonde},   {"telescoping", telescoping},
      {"children", children_suite},   {"reduced-step", reduced_step},
      {"memo", memo},
  };
  return suites;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "cross-engine", "ballot",       "rectangle", "polytope",    "bijection",
      "macmahon",     "monomial",     "symbolic",  "det-identity", "lemma",
      "vandermonde",  "telescoping",  "children",  "reduced-step",          "memo"};
  return names;
}

std::optional<SuiteResult> run_suite(std::string_view name, const VerifyOptions& options) {
  auto it = registry().find(name);
  if (it == registry().end()) return std::nullopt;
  try {
    return it->second(options);
  } catch (const std::exception& e) {
    SuiteResult failed{std::string(name), false, 0, std::string("exception: ") + e.what()};
    return failed;
  }
}

std::vector<SuiteResult> run_all_suites(const VerifyOptions& options) {
  std::vector<std::future<std::optional<SuiteResult>>> pending;
  for (const std::string& name : suite_names()) {
    pending.push_back(std::async(std::launch::async,
                                 [name, options] { return run_suite(name, options); }));
  }
  std::vector<SuiteResult> results;
  for (auto& f : pending) results.push_back(*f.get());
  return results;
}

}  // namespace lpcount
