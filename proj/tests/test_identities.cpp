#include "lpcount/identities.hpp"

#include <gtest/gtest.h>

#include <set>

#include "lpcount/counting.hpp"

namespace lpcount {
namespace {

DiffVector ones(std::size_t n) { return DiffVector(std::vector<Coord>(n, 1)); }

TEST(Children, Examples) {
  EXPECT_EQ(children(LatticePoint{0, 3, 2}).children,
            (std::vector<LatticePoint>{{0, 3, 2, 0}, {0, 3, 2, 1}, {0, 3, 1, 2}, {0, 3, 0, 3}}));
  EXPECT_EQ(children(LatticePoint{0}).children, (std::vector<LatticePoint>{{0, 0}, {0, 1}}));
  EXPECT_EQ(children(LatticePoint{2}).children,
            (std::vector<LatticePoint>{{2, 0}, {2, 1}, {1, 2}, {0, 3}}));
  EXPECT_THROW(children(LatticePoint{}), std::invalid_argument);
}

TEST(Children, SizeIsLastEntryPlusTwo) {
  for (Coord last = 0; last <= 9; ++last) {
    EXPECT_EQ(children(LatticePoint{4, last}).children.size(), last + 2);
  }
}

TEST(Parent, Examples) {
  EXPECT_EQ(parent(LatticePoint{0, 3, 1, 2}), (LatticePoint{0, 3, 2}));
  EXPECT_EQ(parent(LatticePoint{0, 3, 2, 0}), (LatticePoint{0, 3, 2}));
  EXPECT_EQ(parent(LatticePoint{5}), LatticePoint{});
  EXPECT_EQ(parent(LatticePoint{0}), LatticePoint{});
  EXPECT_THROW(parent(LatticePoint{}), std::invalid_argument);
}

TEST(Children, PartitionAllOnesPolytope) {
  for (std::size_t n = 2; n <= 8; ++n) {
    std::set<LatticePoint> seen;
    for (const LatticePoint& y : enumerate_polytope(ones(n - 1))) {
      for (const LatticePoint& x : children(y).children) {
        EXPECT_TRUE(seen.insert(x).second) << "duplicate child " << to_string(x);
        EXPECT_TRUE(in_polytope(x, ones(n)));
        EXPECT_EQ(parent(x), y);
      }
    }
    std::set<LatticePoint> expected;
    for (const LatticePoint& x : enumerate_polytope(ones(n))) expected.insert(x);
    EXPECT_EQ(seen, expected) << n;
  }
}

TEST(Children, MembershipIffParentMembership) {
  // x in the n-polytope exactly when its parent is in the (n-1)-polytope.
  for (std::size_t n = 2; n <= 5; ++n) {
    std::vector<Coord> x(n, 0);
    while (true) {
      const LatticePoint point(x);
      EXPECT_EQ(in_polytope(point, ones(n)), in_polytope(parent(point), ones(n - 1)))
          << to_string(point);
      std::size_t k = n;
      while (k > 0 && x[k - 1] == n + 1) x[--k] = 0;
      if (k == 0) break;
      ++x[k - 1];
    }
  }
}

TEST(Lemma, Examples) {
  EXPECT_EQ(lemma_lhs(1, 1, 1), 2);
  EXPECT_EQ(lemma_rhs(1, 1, 1), 2);
  EXPECT_EQ(lemma_closed(1, 1, 1), 2);
  EXPECT_EQ(lemma_lhs(2, 1, 0), 2);
  EXPECT_EQ(lemma_rhs(2, 1, 0), 2);
  for (std::uint64_t b = 0; b <= 5; ++b) {
    for (std::uint64_t c = 0; c <= 5; ++c) {
      EXPECT_EQ(lemma_lhs(0, b, c), 0);
      EXPECT_EQ(lemma_rhs(0, b, c), 0);
      EXPECT_EQ(lemma_closed(0, b, c), 0);
    }
  }
  for (std::uint64_t a = 0; a <= 10; ++a) EXPECT_EQ(lemma_closed(a, 0, 0), a);
}

TEST(Lemma, ExhaustiveBox) {
  for (std::uint64_t a = 0; a <= 20; ++a) {
    for (std::uint64_t b = 0; b <= 20; ++b) {
      for (std::uint64_t c = 0; c <= 20; ++c) {
        const BigCount closed = lemma_closed(a, b, c);
        ASSERT_EQ(lemma_lhs(a, b, c), closed) << a << " " << b << " " << c;
        ASSERT_EQ(lemma_rhs(a, b, c), closed) << a << " " << b << " " << c;
        ASSERT_EQ(lemma_telescoped(a, b, c), closed) << a << " " << b << " " << c;
      }
    }
  }
}

TEST(Vandermonde, Examples) {
  for (std::uint64_t e = 0; e <= 6; ++e) {
    for (std::uint64_t f = 0; f <= e + 1; ++f) {
      auto [lhs, rhs] = vandermonde_gen(0, e, f);
      EXPECT_EQ(lhs, rhs);
      EXPECT_EQ(rhs, binom(static_cast<std::int64_t>(e + 1), static_cast<std::int64_t>(f)));
    }
  }
  EXPECT_EQ(vandermonde_gen(3, 4, 0), std::make_pair(BigCount(1), BigCount(1)));
  EXPECT_EQ(vandermonde_gen(1, 2, 2), std::make_pair(BigCount(6), BigCount(6)));
  EXPECT_THROW(vandermonde_gen(1, 2, 4), std::domain_error);
}

TEST(Vandermonde, ExhaustiveBox) {
  for (std::uint64_t d = 0; d <= 20; ++d) {
    for (std::uint64_t e = 0; e <= 20; ++e) {
      for (std::uint64_t f = 0; f <= e + 1; ++f) {
        auto [lhs, rhs] = vandermonde_gen(d, e, f);
        ASSERT_EQ(lhs, rhs) << d << " " << e << " " << f;
      }
    }
  }
}

TEST(ReducedRecurrenceStep, ChildrenWeightsMatchRecurrence) {
  for (std::uint64_t v1 = 0; v1 <= 6; ++v1) {
    for (std::uint64_t v2 = 0; v2 <= 6; ++v2) {
      for (std::uint64_t c = 0; c <= 6; ++c) {
        EXPECT_EQ(children_weight_sum(v1, v2, c), recurrence_weight_sum(v1, v2, c))
            << v1 << " " << v2 << " " << c;
      }
    }
  }
}

TEST(ReducedRecurrenceStep, ChildrenWeightsSumFromExplicitChildren) {
  // Recompute the left side from children() itself rather than the closed
  // description of the last two coordinates.
  for (std::uint64_t v1 = 0; v1 <= 4; ++v1) {
    for (std::uint64_t v2 = 0; v2 <= 4; ++v2) {
      for (Coord c = 0; c <= 4; ++c) {
        BigCount total = 0;
        for (const LatticePoint& x : children(LatticePoint{1, c}).children) {
          total += binom(static_cast<std::int64_t>(v2 + x[1]) - 1, static_cast<std::int64_t>(x[1])) *
                   binom(static_cast<std::int64_t>(v1 + x[2]) - 1, static_cast<std::int64_t>(x[2]));
        }
        EXPECT_EQ(total, children_weight_sum(v1, v2, c));
      }
    }
  }
}

}  // namespace
}  // namespace lpcount
