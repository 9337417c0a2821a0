#pragma once

// Exact counts of lattice paths restricted by a path p, equivalently of the
// lattice points of the Pitman-Stanley polytope of v = delta(p).
//
// Four independent engines (first-entry recurrence, Kreweras determinant,
// triangular inclusion-exclusion system, sum over the lattice points of the
// all-ones polytope) and two brute-force oracles. Engines are pure apart from
// the MemoTable handed to the recurrence.

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <optional>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "lpcount/exactmath.hpp"
#include "lpcount/path_model.hpp"

namespace lpcount {

enum class Engine { recurrence, determinant, triangular, theorem, dp_oracle };

inline constexpr Engine kAllEngines[] = {Engine::recurrence, Engine::determinant,
                                         Engine::triangular, Engine::theorem,
                                         Engine::dp_oracle};

/// "recurrence", "determinant", "triangular", "theorem", "dp".
std::string_view engine_name(Engine e);
std::optional<Engine> parse_engine(std::string_view name);

inline constexpr std::size_t kDefaultTheoremCap = 14;
inline constexpr std::uint64_t kDefaultMonomialCap = 1'000'000;

struct EngineLimits {
  std::size_t theorem_cap = kDefaultTheoremCap;
  std::uint64_t monomial_cap = kDefaultMonomialCap;
};

/// Lazy lexicographic stream of the lattice points of the polytope
/// { x >= 0 : every partial sum of x <= the matching partial sum of v }.
/// For v = () the stream holds exactly the empty point.
class PolytopePoints {
public:
  explicit PolytopePoints(DiffVector v);

  class iterator {
  public:
    using iterator_category = std::input_iterator_tag;
    using value_type = LatticePoint;
    using difference_type = std::ptrdiff_t;
    using pointer = const LatticePoint*;
    using reference = const LatticePoint&;

    iterator() = default;

    reference operator*() const { return current_; }
    pointer operator->() const { return &current_; }
    iterator& operator++();
    void operator++(int) { ++*this; }

    friend bool operator==(const iterator& a, std::default_sentinel_t) {
      return a.done_;
    }

  private:
    friend class PolytopePoints;
    iterator(const PolytopePoints* owner);

    const PolytopePoints* owner_ = nullptr;
    std::vector<Coord> coords_;
    std::vector<Coord> slack_;  // slack_[i]: room left for x_i given x_1..x_{i-1}
    LatticePoint current_;
    bool done_ = true;
  };

  iterator begin() const { return iterator(this); }
  std::default_sentinel_t end() const { return {}; }

  const DiffVector& bound() const noexcept { return v_; }

private:
  DiffVector v_;
  std::vector<Coord> sums_;  // saturating partial sums of v
};

PolytopePoints enumerate_polytope(const DiffVector& v);

/// Cache for the first-entry recurrence keyed by the full remaining
/// difference vector. Not synchronized; confine one table to one thread.
class MemoTable {
public:
  struct KeyHash {
    std::size_t operator()(const std::vector<Coord>& key) const noexcept;
  };
  using Map = std::unordered_map<std::vector<Coord>, BigCount, KeyHash>;

  const BigCount* find(const std::vector<Coord>& key) const;
  void insert(std::vector<Coord> key, BigCount value);
  std::size_t size() const noexcept { return table_.size(); }
  void clear() { table_.clear(); }

  const Map& entries() const noexcept { return table_; }

private:
  Map table_;
};

/// lp(v) by the first-entry recurrence
///   lp(()) = 1,  lp(v) = sum_{j=0}^{v_1} lp((v_1 + v_2 - j, v_3, ..., v_n)).
BigCount count_recurrence(const DiffVector& v, MemoTable& memo);
BigCount count_recurrence(const DiffVector& v);

/// Kreweras matrix a_ij = binom(p_i + 1, j - i + 1).
IntMatrix kreweras_matrix(const HeightPath& p);
BigCount count_determinant(const HeightPath& p);

/// All prefix counts LP((p_1..p_j)) for j = 0..n, by forward substitution in
/// the inclusion-exclusion system. Entry 0 is LP(()) = 1.
std::vector<BigCount> triangular_prefix_counts(const HeightPath& p);
BigCount count_triangular(const HeightPath& p);

/// Sum over the C_{n+1} lattice points x of the all-ones polytope of
/// prod_i binom(v_{n+1-i} + x_i - 1, x_i). Throws CapacityError if n > cap.
BigCount count_theorem(const HeightPath& p, std::size_t cap = kDefaultTheoremCap);

/// Column-by-column prefix-sum count of nondecreasing q with q_i <= p_i.
BigCount dp_oracle(const HeightPath& p);

/// Tallies with exactly n E's and m N's restricted by p; p must have length n
/// and p_n <= m (std::invalid_argument otherwise).
BigCount count_fixed_endpoint(const HeightPath& p, Coord terminal_height);

/// (m+n)! (m+n+1)! / (m! n! (m+1)! (n+1)!).
BigCount macmahon_total(std::uint64_t n, std::uint64_t m);

/// Sum of LP(p) over every path p from (0,0) to (n,m), i.e. every
/// nondecreasing p of length n with p_n <= m, each counted by dp_oracle.
BigCount macmahon_bruteforce(std::uint64_t n, std::uint64_t m);

/// Distinct monomials of prod_i (a_1 + ... + a_{p_i + 1}), by exhaustive
/// expansion. Throws CapacityError if prod (p_i + 1) exceeds the cap.
BigCount monomial_oracle(const HeightPath& p, std::uint64_t cap = kDefaultMonomialCap);

BigCount count(const HeightPath& p, Engine engine, const EngineLimits& limits = {});

/// All nondecreasing tuples of length n with entries <= max_height, in
/// lexicographic order.
std::vector<HeightPath> all_paths(std::size_t n, Coord max_height);

}  // namespace lpcount
