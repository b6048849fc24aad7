#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "tricirc/pregraph.hpp"

using namespace tricirc;

namespace {

struct Kinds {
  int semi = 0, loops = 0, links = 0;
};

Kinds kinds(const Pregraph& p) {
  Kinds k;
  for (int d = 0; d < p.num_darts(); ++d) {
    if (p.inv(d) < d) continue;
    switch (p.edge_kind(d)) {
      case EdgeKind::SemiEdge: ++k.semi; break;
      case EdgeKind::Loop: ++k.loops; break;
      case EdgeKind::Link: ++k.links; break;
    }
  }
  return k;
}

// Oracle: trace of the L-th power of the non-backtracking dart matrix,
// restricted to darts leaving `start`.
std::uint64_t nonbacktracking_closed(const Pregraph& p, int start, int length) {
  const int nd = p.num_darts();
  using Mat = std::vector<std::vector<std::uint64_t>>;
  Mat b(nd, std::vector<std::uint64_t>(nd, 0));
  for (int d = 0; d < nd; ++d)
    for (int e = 0; e < nd; ++e) b[d][e] = (p.end(d) == p.beg(e) && e != p.inv(d)) ? 1 : 0;
  Mat acc = b;
  for (int step = 1; step < length; ++step) {
    Mat next(nd, std::vector<std::uint64_t>(nd, 0));
    for (int i = 0; i < nd; ++i)
      for (int m = 0; m < nd; ++m)
        if (acc[i][m])
          for (int j = 0; j < nd; ++j) next[i][j] += acc[i][m] * b[m][j];
    acc = std::move(next);
  }
  std::uint64_t total = 0;
  for (int d = 0; d < nd; ++d)
    if (p.beg(d) == start) total += acc[d][d];
  return total;
}

}  // namespace

TEST(Pregraph, DeltaCatalogueShapes) {
  const std::array<Kinds, 4> expected{{{1, 0, 4}, {1, 1, 3}, {3, 0, 3}, {1, 2, 2}}};
  for (int i = 1; i <= 4; ++i) {
    const Pregraph& p = delta(i);
    EXPECT_EQ(p.num_vertices(), 3);
    for (int v = 0; v < 3; ++v) EXPECT_EQ(p.valence(v), 3) << "delta " << i;
    EXPECT_TRUE(p.is_connected());
    const Kinds k = kinds(p);
    EXPECT_EQ(k.semi, expected[i - 1].semi) << "delta " << i;
    EXPECT_EQ(k.loops, expected[i - 1].loops) << "delta " << i;
    EXPECT_EQ(k.links, expected[i - 1].links) << "delta " << i;
  }
  EXPECT_THROW(delta(0), std::out_of_range);
  EXPECT_THROW(delta(5), std::out_of_range);
}

TEST(Pregraph, DeltasPairwiseDistinct) {
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j) EXPECT_EQ(pregraphs_isomorphic(delta(i), delta(j)), i == j);
}

TEST(Pregraph, EnumerationFindsExactlyTheFour) {
  const auto found = enumerate_cubic_pregraphs_3v();
  ASSERT_EQ(found.size(), 4u);
  std::set<int> matched;
  for (const auto& p : found)
    for (int i = 1; i <= 4; ++i)
      if (pregraphs_isomorphic(p, delta(i))) matched.insert(i);
  EXPECT_EQ(matched, (std::set<int>{1, 2, 3, 4}));
}

TEST(Pregraph, FromArraysValidates) {
  EXPECT_NO_THROW(Pregraph::from_arrays(1, {0}, {0}));
  EXPECT_THROW(Pregraph::from_arrays(1, {0, 0}, {1, 1}), std::invalid_argument);
  EXPECT_THROW(Pregraph::from_arrays(1, {2}, {0}), std::invalid_argument);
  const Pregraph p = Pregraph::from_arrays(2, {0, 1, 1}, {1, 0, 2});
  EXPECT_EQ(p.edge_kind(0), EdgeKind::Link);
  EXPECT_EQ(p.edge_kind(2), EdgeKind::SemiEdge);
  EXPECT_EQ(p.valence(1), 2);
}

TEST(Pregraph, DartNamesResolve) {
  const Pregraph& d1 = delta(1);
  const int uv = d1.dart("(uv)_0");
  EXPECT_EQ(d1.inv(uv), d1.dart("(vu)_0"));
  EXPECT_EQ(d1.inv(d1.dart("(uu)_k")), d1.dart("(uu)_k"));
  EXPECT_THROW(d1.dart("(xy)_9"), std::out_of_range);
}

TEST(Walks, ReducedRules) {
  const Pregraph& d1 = delta(1);
  const int uu = d1.dart("(uu)_k"), uv = d1.dart("(uv)_0"), vu = d1.dart("(vu)_0");
  const int vw = d1.dart("(vw)_r"), wu = d1.dart("(wu)_0");
  EXPECT_TRUE(is_reduced(d1, Walk{{uu}}));
  EXPECT_FALSE(is_reduced(d1, Walk{{uu, uu}}));
  EXPECT_FALSE(is_reduced(d1, Walk{{uv, vu}}));
  EXPECT_TRUE(is_reduced(d1, Walk{{uv, vw, wu}}));
  EXPECT_TRUE(is_closed(d1, Walk{{uv, vw, wu}}));
  // wrap-around: last dart followed by the first
  EXPECT_FALSE(is_reduced(d1, Walk{{uv, vw, d1.inv(vw), vu}}));
  EXPECT_FALSE(is_walk(d1, Walk{{uv, uv}}));
}

TEST(Walks, CountsMatchNonBacktrackingTrace) {
  for (int i = 1; i <= 4; ++i)
    for (int x = 0; x < 3; ++x)
      for (int len = 2; len <= 8; ++len)
        EXPECT_EQ(reduced_closed_walks(delta(i), x, len).size(), nonbacktracking_closed(delta(i), x, len))
            << "delta " << i << " start " << x << " length " << len;
}

TEST(Walks, InversionClosure) {
  for (int i = 1; i <= 4; ++i)
    for (int x = 0; x < 3; ++x)
      for (int len = 1; len <= 8; ++len) {
        const auto walks = reduced_closed_walks(delta(i), x, len);
        const std::set<Walk> all(walks.begin(), walks.end());
        EXPECT_EQ(all.size(), walks.size());
        for (const auto& w : walks) {
          ASSERT_TRUE(is_walk(delta(i), w));
          ASSERT_TRUE(is_closed(delta(i), w));
          ASSERT_TRUE(is_reduced(delta(i), w));
          EXPECT_TRUE(all.count(inverse(delta(i), w))) << to_string(delta(i), w);
        }
      }
}

TEST(Walks, SemiEdgeAloneIsAClosedWalkOfLengthOne) {
  EXPECT_EQ(reduced_closed_walks(delta(1), 0, 1).size(), 1u);
  EXPECT_EQ(reduced_closed_walks(delta(3), 1, 1).size(), 1u);
  EXPECT_EQ(reduced_closed_walks(delta(1), 1, 1).size(), 0u);
}
