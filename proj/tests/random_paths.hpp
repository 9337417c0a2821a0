#pragma once

// Generators and brute-force oracles shared by the tests. Nothing in here
// calls the engines under test.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "lpcount/path_model.hpp"

namespace lpcount::testing_support {

inline HeightPath random_path(std::mt19937_64& rng, std::size_t n, Coord max_height) {
  std::uniform_int_distribution<Coord> height(0, max_height);
  std::vector<Coord> h(n);
  for (Coord& x : h) x = height(rng);
  std::sort(h.begin(), h.end());
  return HeightPath(std::move(h));
}

inline DiffVector random_diffs(std::mt19937_64& rng, std::size_t n, Coord max_entry) {
  std::uniform_int_distribution<Coord> entry(0, max_entry);
  std::vector<Coord> v(n);
  for (Coord& x : v) x = entry(rng);
  return DiffVector(std::move(v));
}

/// Number of nondecreasing q with q_i <= p_i, by walking the whole box
/// prod [0, p_i].
inline std::uint64_t brute_force_lp(const std::vector<Coord>& p) {
  std::uint64_t total = 0;
  std::vector<Coord> q(p.size(), 0);
  std::function<void(std::size_t)> walk = [&](std::size_t i) {
    if (i == p.size()) {
      if (std::is_sorted(q.begin(), q.end())) ++total;
      return;
    }
    for (Coord h = 0; h <= p[i]; ++h) {
      q[i] = h;
      walk(i + 1);
    }
  };
  walk(0);
  return total;
}

/// Lattice points of the polytope of v, by walking the box [0, sum v]^n and
/// filtering on the partial-sum inequalities.
inline std::vector<std::vector<Coord>> brute_force_polytope(const std::vector<Coord>& v) {
  Coord total = 0;
  for (Coord x : v) total += x;
  std::vector<std::vector<Coord>> out;
  std::vector<Coord> x(v.size(), 0);
  std::function<void(std::size_t)> walk = [&](std::size_t i) {
    if (i == v.size()) {
      Coord sx = 0, sv = 0;
      for (std::size_t k = 0; k < v.size(); ++k) {
        sx += x[k];
        sv += v[k];
        if (sx > sv) return;
      }
      out.push_back(x);
      return;
    }
    for (Coord c = 0; c <= total; ++c) {
      x[i] = c;
      walk(i + 1);
    }
  };
  walk(0);
  return out;
}

/// Catalan numbers from C_0 = 1 and C_n = sum C_{i-1} C_{n-i}, in 64 bits.
inline std::vector<std::uint64_t> catalan_table(std::size_t up_to) {
  std::vector<std::uint64_t> c(up_to + 1, 0);
  c[0] = 1;
  for (std::size_t n = 1; n <= up_to; ++n) {
    for (std::size_t i = 1; i <= n; ++i) c[n] += c[i - 1] * c[n - i];
  }
  return c;
}

}  // namespace lpcount::testing_support
