#include "lpcount/counting.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <set>
#include <stdexcept>
#include <string>

#include "lpcount/errors.hpp"

namespace lpcount {

namespace {

constexpr Coord kCoordMax = std::numeric_limits<Coord>::max();

Coord saturating_add(Coord a, Coord b) {
  return b > kCoordMax - a ? kCoordMax : a + b;
}

Coord checked_add(Coord a, Coord b) {
  if (b > kCoordMax - a) throw std::overflow_error("coordinate sum exceeds 64 bits");
  return a + b;
}

}  // namespace

std::string_view engine_name(Engine e) {
  switch (e) {
    case Engine::recurrence: return "recurrence";
    case Engine::determinant: return "determinant";
    case Engine::triangular: return "triangular";
    case Engine::theorem: return "theorem";
    case Engine::dp_oracle: return "dp";
  }
  return "unknown";
}

std::optional<Engine> parse_engine(std::string_view name) {
  for (Engine e : kAllEngines) {
    if (engine_name(e) == name) return e;
  }
  return std::nullopt;
}

// --- polytope enumeration ------------------------------------------------

PolytopePoints::PolytopePoints(DiffVector v) : v_(std::move(v)), sums_(v_.size()) {
  Coord total = 0;
  for (std::size_t i = 0; i < v_.size(); ++i) {
    total = saturating_add(total, v_[i]);
    sums_[i] = total;
  }
}

PolytopePoints::iterator::iterator(const PolytopePoints* owner)
    : owner_(owner),
      coords_(owner->v_.size(), 0),
      slack_(owner->sums_),
      current_(LatticePoint(coords_)),
      done_(false) {}

PolytopePoints::iterator& PolytopePoints::iterator::operator++() {
  const std::size_t n = coords_.size();
  std::size_t k = n;
  while (k > 0 && coords_[k - 1] == slack_[k - 1]) --k;
  if (k == 0) {
    done_ = true;
    return *this;
  }
  --k;
  ++coords_[k];
  // Everything after position k resets to zero; the prefix sum through k is
  // what the later coordinates have to fit under.
  Coord prefix = 0;
  for (std::size_t i = 0; i <= k; ++i) prefix += coords_[i];
  for (std::size_t i = k + 1; i < n; ++i) {
    coords_[i] = 0;
    slack_[i] = owner_->sums_[i] - prefix;
  }
  current_ = LatticePoint(coords_);
  return *this;
}

PolytopePoints enumerate_polytope(const DiffVector& v) { return PolytopePoints(v); }

// --- recurrence ----------------------------------------------------------

std::size_t MemoTable::KeyHash::operator()(const std::vector<Coord>& key) const noexcept {
  // Keys reached from one root share their tail, so the head, the length and
  // the last few entries already separate them well.
  std::size_t h = std::hash<std::size_t>{}(key.size());
  auto mix = [&h](Coord x) {
    h ^= std::hash<Coord>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  };
  if (!key.empty()) mix(key.front());
  std::size_t tail = std::min<std::size_t>(key.size(), 8);
  for (std::size_t i = key.size() - tail; i < key.size(); ++i) mix(key[i]);
  return h;
}

const BigCount* MemoTable::find(const std::vector<Coord>& key) const {
  auto it = table_.find(key);
  return it == table_.end() ? nullptr : &it->second;
}

void MemoTable::insert(std::vector<Coord> key, BigCount value) {
  table_.insert_or_assign(std::move(key), std::move(value));
}

namespace {

BigCount recurse(const std::vector<Coord>& v, MemoTable& memo) {
  if (v.empty()) return 1;
  if (v.size() == 1) return BigCount(v[0]) + 1;
  if (const BigCount* hit = memo.find(v)) return *hit;

  // lp(v) = sum over first entry j of lp((v_1 + v_2 - j, v_3, ..., v_n)).
  std::vector<Coord> tail(v.begin() + 1, v.end());
  const Coord top = checked_add(v[0], v[1]);
  BigCount total = 0;
  for (Coord j = 0;; ++j) {
    tail[0] = top - j;
    total += recurse(tail, memo);
    if (j == v[0]) break;
  }
  memo.insert(v, total);
  return total;
}

}  // namespace

BigCount count_recurrence(const DiffVector& v, MemoTable& memo) {
  return recurse(std::vector<Coord>(v.begin(), v.end()), memo);
}

BigCount count_recurrence(const DiffVector& v) {
  MemoTable memo;
  return count_recurrence(v, memo);
}

// --- determinant ---------------------------------------------------------

IntMatrix kreweras_matrix(const HeightPath& p) {
  const std::size_t n = p.size();
  IntMatrix a(n);
  for (std::size_t i = 0; i < n; ++i) {
    const BigCount top = BigCount(p[i]) + 1;
    // a_ij = 0 for j < i - 1
    for (std::size_t j = (i == 0 ? 0 : i - 1); j < n; ++j) {
      a(i, j) = binom(top, j + 1 - i);
    }
  }
  return a;
}

BigCount count_determinant(const HeightPath& p) {
  return det_int(kreweras_matrix(p));
}

// --- triangular system ---------------------------------------------------

std::vector<BigCount> triangular_prefix_counts(const HeightPath& p) {
  const std::size_t n = p.size();
  // Equation j (0 <= j <= n):
  //   sum_{i=1}^{j+1} (-1)^{j-i+1} binom(p_i + 1, j - i + 1) L_{i-1} = [j == 0]
  // The i = j+1 coefficient is binom(., 0) = 1, so each L_j is explicit.
  std::vector<BigCount> prefix(n + 1);
  prefix[0] = 1;
  for (std::size_t j = 1; j <= n; ++j) {
    BigCount value = 0;
    for (std::size_t i = 1; i <= j; ++i) {
      BigCount term = binom(BigCount(p[i - 1]) + 1, j - i + 1) * prefix[i - 1];
      if ((j - i) % 2 == 0) {
        value += term;
      } else {
        value -= term;
      }
    }
    prefix[j] = std::move(value);
  }
  return prefix;
}

BigCount count_triangular(const HeightPath& p) {
  return triangular_prefix_counts(p).back();
}

// --- sum over the all-ones polytope --------------------------------------

BigCount count_theorem(const HeightPath& p, std::size_t cap) {
  const std::size_t n = p.size();
  if (n > cap) {
    throw CapacityError("theorem engine capacity exceeded: n = " + std::to_string(n) +
                            " > cap " + std::to_string(cap),
                        cap);
  }
  const DiffVector v = delta(p);

  // factor[i][x] = binom(v_{n-i} + x - 1, x) for the 0-based position i;
  // x_i can be at most i + 1 inside the all-ones polytope.
  std::vector<std::vector<BigCount>> factor(n);
  for (std::size_t i = 0; i < n; ++i) {
    const BigCount w = BigCount(v[n - 1 - i]);
    factor[i].resize(i + 2);
    for (std::size_t x = 0; x <= i + 1; ++x) factor[i][x] = binom(w + x - 1, x);
  }

  // Depth-first walk in lexicographic order; a zero factor prunes the subtree.
  std::vector<BigCount> partial(n + 1);
  partial[0] = 1;
  BigCount total = 0;
  std::function<void(std::size_t, std::size_t)> walk = [&](std::size_t i,
                                                           std::size_t used) {
    if (i == n) {
      total += partial[n];
      return;
    }
    const std::size_t room = i + 1 - used;
    for (std::size_t x = 0; x <= room; ++x) {
      const BigCount& f = factor[i][x];
      if (f == 0) continue;
      partial[i + 1] = partial[i] * f;
      walk(i + 1, used + x);
    }
  };
  walk(0, 0);
  return total;
}

// --- oracles -------------------------------------------------------------

namespace {

// Nondecreasing q with q_i <= bound_i, by prefix sums over heights.
BigCount count_under(const std::vector<Coord>& bound) {
  if (bound.empty()) return 1;
  const Coord top = *std::max_element(bound.begin(), bound.end());
  if (top == kCoordMax) throw std::overflow_error("height too large for the oracle");
  std::vector<BigCount> g(static_cast<std::size_t>(top) + 1, 0);
  for (Coord h = 0; h <= bound[0]; ++h) g[h] = 1;
  for (std::size_t i = 1; i < bound.size(); ++i) {
    for (Coord h = 1; h <= bound[i]; ++h) g[h] += g[h - 1];
    for (Coord h = bound[i] + 1; h <= top; ++h) g[h] = 0;
  }
  BigCount total = 0;
  for (const BigCount& value : g) total += value;
  return total;
}

}  // namespace

BigCount dp_oracle(const HeightPath& p) {
  return count_under(std::vector<Coord>(p.begin(), p.end()));
}

BigCount count_fixed_endpoint(const HeightPath& p, Coord terminal_height) {
  if (!p.empty() && p.back() > terminal_height) {
    throw std::invalid_argument("path ends above the terminal height " +
                                std::to_string(terminal_height));
  }
  std::vector<Coord> bound(p.begin(), p.end());
  for (Coord& b : bound) b = std::min(b, terminal_height);
  return count_under(bound);
}

BigCount macmahon_total(std::uint64_t n, std::uint64_t m) {
  BigCount numerator = factorial(m + n) * factorial(m + n + 1);
  BigCount denominator = factorial(m) * factorial(n) * factorial(m + 1) * factorial(n + 1);
  BigCount out;
  mpz_divexact(out.get_mpz_t(), numerator.get_mpz_t(), denominator.get_mpz_t());
  return out;
}

std::vector<HeightPath> all_paths(std::size_t n, Coord max_height) {
  std::vector<HeightPath> out;
  std::vector<Coord> current(n);
  std::function<void(std::size_t, Coord)> fill = [&](std::size_t i, Coord low) {
    if (i == n) {
      out.emplace_back(current);
      return;
    }
    for (Coord h = low; h <= max_height; ++h) {
      current[i] = h;
      fill(i + 1, h);
    }
  };
  fill(0, 0);
  return out;
}

BigCount macmahon_bruteforce(std::uint64_t n, std::uint64_t m) {
  BigCount total = 0;
  for (const HeightPath& p : all_paths(n, m)) total += dp_oracle(p);
  return total;
}

BigCount monomial_oracle(const HeightPath& p, std::uint64_t cap) {
  std::uint64_t terms = 1;
  for (Coord h : p) {
    if (h >= cap || terms > cap / (h + 1)) {
      throw CapacityError("monomial oracle capacity exceeded (cap " +
                              std::to_string(cap) + " expanded terms)",
                          cap);
    }
    terms *= h + 1;
  }

  // Each expanded term picks a_{j_i} from factor i; the monomial is the
  // multiset of picks.
  std::set<std::vector<Coord>> monomials;
  std::vector<Coord> pick(p.size(), 1);
  std::vector<Coord> sorted;
  while (true) {
    sorted = pick;
    std::sort(sorted.begin(), sorted.end());
    monomials.insert(sorted);
    std::size_t k = p.size();
    while (k > 0 && pick[k - 1] == p[k - 1] + 1) {
      pick[k - 1] = 1;
      --k;
    }
    if (k == 0) break;
    ++pick[k - 1];
  }
  return BigCount(static_cast<unsigned long>(monomials.size()));
}

BigCount count(const HeightPath& p, Engine engine, const EngineLimits& limits) {
  switch (engine) {
    case Engine::recurrence: return count_recurrence(delta(p));
    case Engine::determinant: return count_determinant(p);
    case Engine::triangular: return count_triangular(p);
    case Engine::theorem: return count_theorem(p, limits.theorem_cap);
    case Engine::dp_oracle: return dp_oracle(p);
  }
  throw std::invalid_argument("unknown engine");
}

}  // namespace lpcount
