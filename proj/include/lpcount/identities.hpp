#pragma once

// The binomial identities and the children/parent correspondence used to
// show that the all-ones-polytope sum satisfies the first-entry recurrence.

#include <cstdint>
#include <utility>
#include <vector>

#include "lpcount/exactmath.hpp"
#include "lpcount/path_model.hpp"

namespace lpcount {

struct ChildSet {
  LatticePoint parent;
  std::vector<LatticePoint> children;
};

/// For y = (y_1..y_{n-1}): (y, 0) and (y_1..y_{n-2}, y_{n-1} - i, i + 1) for
/// 0 <= i <= y_{n-1}; y_{n-1} + 2 children in total. Throws
/// std::invalid_argument for the empty point, which has no children.
ChildSet children(const LatticePoint& y);

/// Unique y with x among children(y). Every length-1 point has parent ().
/// Throws std::invalid_argument for the empty point.
LatticePoint parent(const LatticePoint& x);

/// sum_{i=0}^{c} binom(b+c-i-1, c-i) binom(a+i, i+1)
BigCount lemma_lhs(std::uint64_t a, std::uint64_t b, std::uint64_t c);
/// sum_{j=0}^{a-1} binom(a+b+c-j-1, c)
BigCount lemma_rhs(std::uint64_t a, std::uint64_t b, std::uint64_t c);
/// binom(a+b+c, c+1) - binom(b+c, c+1)
BigCount lemma_closed(std::uint64_t a, std::uint64_t b, std::uint64_t c);

/// sum_{j=0}^{a-1} [binom(a+b+c-j, c+1) - binom(a+b+c-j-1, c+1)]
BigCount lemma_telescoped(std::uint64_t a, std::uint64_t b, std::uint64_t c);

/// (sum_{k=0}^{f} binom(d+k, k) binom(e-k, f-k), binom(d+e+1, f)).
/// Requires f <= e + 1 (std::domain_error otherwise).
std::pair<BigCount, BigCount> vandermonde_gen(std::uint64_t d, std::uint64_t e,
                                              std::uint64_t f);

/// Both sides of the reduced per-parent identity, with y_{n-1} = c:
///   sum over children x of binom(v2 + x_{n-1} - 1, x_{n-1}) binom(v1 + x_n - 1, x_n)
/// and
///   sum_{j=0}^{v1} binom(v1 + v2 - j + c - 1, c).
BigCount children_weight_sum(std::uint64_t v1, std::uint64_t v2, std::uint64_t c);
BigCount recurrence_weight_sum(std::uint64_t v1, std::uint64_t v2, std::uint64_t c);

}  // namespace lpcount
