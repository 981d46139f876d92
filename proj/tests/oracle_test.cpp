#include "ktrees/oracle.hpp"

#include <gtest/gtest.h>

#include "ktrees/errors.hpp"
#include "oracles.hpp"

namespace ktrees::oracle {
namespace {

SmallGraph path(int n) {
  SmallGraph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

TEST(SmallGraph, RejectsLoopsAndOversize) {
  SmallGraph g(3);
  EXPECT_THROW(g.add_edge(1, 1), std::invalid_argument);
  EXPECT_THROW(g.add_edge(0, 3), std::invalid_argument);
  EXPECT_THROW(SmallGraph(kMaxVertices + 1), BoundsExceeded);
  g.add_edge(0, 2);
  EXPECT_TRUE(g.adjacent(2, 0));
}

TEST(EnumerateKcliques, Examples) {
  EXPECT_EQ(enumerate_kcliques(SmallGraph::complete(3), 2).size(), 3u);
  EXPECT_EQ(enumerate_kcliques(SmallGraph::complete(4), 3).size(), 4u);
  EXPECT_EQ(enumerate_kcliques(path(3), 2), (std::vector<std::vector<int>>{{0, 1}, {1, 2}}));
  EXPECT_EQ(enumerate_kcliques(path(3), 3).size(), 0u);
}

TEST(CanonicalForm, InvariantUnderRelabeling) {
  SmallGraph a(5);  // triangle 0-1-2 with pendant 3 on 0 and 4 on 3
  a.add_edge(0, 1);
  a.add_edge(1, 2);
  a.add_edge(0, 2);
  a.add_edge(0, 3);
  a.add_edge(3, 4);
  SmallGraph b(5);  // same shape, labels scrambled
  b.add_edge(4, 2);
  b.add_edge(2, 0);
  b.add_edge(4, 0);
  b.add_edge(4, 1);
  b.add_edge(1, 3);
  EXPECT_EQ(canonical_form(a), canonical_form(b));
  EXPECT_NE(canonical_form(a), canonical_form(path(5)));
}

TEST(CanonicalForm, RoundTripsThroughGraph) {
  for (const auto& form : grow_ktrees(2, 4)) EXPECT_EQ(canonical_form(from_canonical(form)), form);
  EXPECT_EQ(to_hex(canonical_form(path(2))), "0280");
}

TEST(GrowKtrees, TableValues) {
  EXPECT_EQ(grow_ktrees(1, 3).size(), 2u);
  EXPECT_EQ(grow_ktrees(2, 4).size(), 5u);
  for (int k = 1; k <= 3; ++k) EXPECT_EQ(grow_ktrees(k, 0).size(), 1u);
  EXPECT_EQ(brute_count(1, 5), 6);
  EXPECT_EQ(brute_count(3, 5), 15);
  EXPECT_EQ(brute_count(2, 5), 12);
}

TEST(GrowKtrees, Bounds) {
  EXPECT_THROW(grow_ktrees(4, 1), BoundsExceeded);
  EXPECT_THROW(grow_ktrees(2, 6), BoundsExceeded);
  EXPECT_THROW(grow_ktrees(0, 2), BoundsExceeded);
  EXPECT_THROW(brute_counts(1, -1), BoundsExceeded);
}

TEST(GrowKtrees, VertexAndHedronBookkeeping) {
  for (int k = 1; k <= 3; ++k) {
    for (int n = 0; n <= 4; ++n) {
      for (const auto& form : grow_ktrees(k, n)) {
        const SmallGraph g = from_canonical(form);
        EXPECT_EQ(g.vertex_count(), k + n);
        EXPECT_EQ(enumerate_kcliques(g, k + 1).size(), static_cast<std::size_t>(n));
        EXPECT_EQ(enumerate_kcliques(g, k).size(), static_cast<std::size_t>(k * n + 1));
      }
    }
  }
}

TEST(GrowKtrees, BruteCountsAgreeWithLevels) {
  const auto counts = brute_counts(2, 5);
  for (int n = 0; n <= 5; ++n) EXPECT_EQ(counts[static_cast<std::size_t>(n)], brute_count(2, n));
}

// Coning a k-tree with n <= k+2 hedra gives a (k+1)-tree, and every such
// (k+1)-tree arises from exactly one class.
TEST(GrowKtrees, ConeIsABijectionInTheStableRange) {
  for (const auto& [k, n] : std::vector<std::pair<int, int>>{{1, 3}, {2, 4}, {1, 2}, {2, 3}}) {
    std::set<CanonicalForm> coned;
    for (const auto& form : grow_ktrees(k, n)) coned.insert(canonical_form(testing::cone(from_canonical(form))));
    EXPECT_EQ(coned.size(), grow_ktrees(k, n).size());
    EXPECT_EQ(coned, grow_ktrees(k + 1, n)) << "k=" << k << " n=" << n;
  }
}

}  // namespace
}  // namespace ktrees::oracle
