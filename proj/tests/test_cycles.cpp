#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "tricirc/cycles.hpp"
#include "tricirc/families.hpp"
#include "tricirc/symmetry.hpp"

using namespace tricirc;

namespace {

// Oracle: enumerate vertex sets as sorted sequences, then count the distinct
// cyclic orders that close up, by brute force over permutations.
std::uint64_t brute_cycles(const SimpleGraph& g, int c) {
  const int n = g.order();
  std::uint64_t total = 0;
  std::vector<int> pick(n, 0);
  std::fill(pick.end() - c, pick.end(), 1);
  do {
    std::vector<int> verts;
    for (int i = 0; i < n; ++i)
      if (pick[i]) verts.push_back(i);
    // fix the first vertex, count orders up to reversal
    std::uint64_t closed = 0;
    std::vector<int> rest(verts.begin() + 1, verts.end());
    do {
      bool ok = g.adjacent(verts[0], rest.front()) && g.adjacent(rest.back(), verts[0]);
      for (std::size_t i = 0; ok && i + 1 < rest.size(); ++i) ok = g.adjacent(rest[i], rest[i + 1]);
      closed += ok;
    } while (std::next_permutation(rest.begin(), rest.end()));
    total += closed / 2;
  } while (std::next_permutation(pick.begin(), pick.end()));
  return total;
}

SimpleGraph random_cubicish(int n, std::mt19937& rng) {
  SimpleGraph g(n);
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (int tries = 0; tries < 4 * n; ++tries) {
    const int a = pick(rng), b = pick(rng);
    if (a != b && !g.adjacent(a, b) && g.degree(a) < 3 && g.degree(b) < 3) g.add_edge(a, b);
  }
  return g;
}

}  // namespace

TEST(Cycles, BruteForceOracleOnSmallGraphs) {
  std::mt19937 rng(21);
  std::vector<SimpleGraph> graphs{moebius(3), prism(3), prism(4), gp(5, 2)};
  for (int i = 0; i < 10; ++i) graphs.push_back(random_cubicish(9, rng));
  for (const auto& g : graphs)
    for (int c = 3; c <= std::min(g.order(), 8); ++c) {
      const CycleCounts counts = count_cycles(g, c);
      EXPECT_EQ(counts.total, brute_cycles(g, c)) << "c=" << c;
    }
  EXPECT_EQ(count_cycles(gp(5, 2), 5).total, 12u);  // Petersen: 12 pentagons
  EXPECT_EQ(count_cycles(moebius(3), 4).total, 9u);
}

TEST(Cycles, ParallelMatchesSerial) {
  const std::vector<SimpleGraph> graphs{x_graph(9), y_graph(9), t4(9, 1, 2), t3(10, 3), gp(33, 10), prism(12)};
  for (const auto& g : graphs)
    for (int c = 3; c <= 9; ++c) {
      const auto p = count_cycles(g, c), s = count_cycles_serial(g, c);
      EXPECT_EQ(p.total, s.total);
      EXPECT_EQ(p.per_edge, s.per_edge);
      EXPECT_EQ(p.per_vertex, s.per_vertex);
    }
}

TEST(Cycles, DoubleCountingAndLocalCounts) {
  const std::vector<SimpleGraph> graphs{x_graph(9), y_graph(11), t2(9, 4, 1), moebius(10)};
  for (const auto& g : graphs)
    for (int c = 3; c <= 9; ++c) {
      const CycleCounts counts = count_cycles(g, c);
      const auto edge_sum = std::accumulate(counts.per_edge.begin(), counts.per_edge.end(), std::uint64_t{0});
      const auto vert_sum = std::accumulate(counts.per_vertex.begin(), counts.per_vertex.end(), std::uint64_t{0});
      EXPECT_EQ(edge_sum, c * counts.total);
      EXPECT_EQ(vert_sum, c * counts.total);
      const auto edges = g.edges();
      for (std::size_t e = 0; e < edges.size(); e += 7)
        EXPECT_EQ(cycles_through_edge(g, edges[e].first, edges[e].second, c), counts.per_edge[e]);
      for (int v = 0; v < g.order(); v += 5) EXPECT_EQ(cycles_through_vertex(g, v, c), counts.per_vertex[v]);
    }
}

TEST(Cycles, Girth) {
  EXPECT_EQ(girth(prism(27)), 4);
  EXPECT_EQ(girth(moebius(27)), 4);
  EXPECT_EQ(girth(moebius(3)), 4);
  EXPECT_EQ(girth(prism(3)), 3);
  EXPECT_EQ(girth(gp(5, 2)), 5);
  EXPECT_GE(girth(x_graph(9)), 5);
  SimpleGraph path(4);
  path.add_edge(0, 1);
  path.add_edge(1, 2);
  EXPECT_EQ(girth(path), 0);
  for (const auto& g : {x_graph(9), y_graph(9), t4(9, 1, 2), prism(8), gp(33, 10)}) {
    EXPECT_EQ(girth(g), girth_serial(g));
    int local = 1 << 30;
    for (int v = 0; v < g.order(); ++v) local = std::min(local, girth_at(g, v));
    EXPECT_EQ(local, girth(g));
  }
}

TEST(Cycles, XSignature) {
  const SimpleGraph g = x_graph(9);
  const CycleCounts counts = count_cycles(g, 8);
  const auto edges = g.edges();
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const EdgeTag t = g.tag(edges[e].first, edges[e].second);
    const std::uint64_t expected = (t == EdgeTag::S || t == EdgeTag::K) ? 6 : 5;
    EXPECT_EQ(counts.per_edge[e], expected) << to_string(t);
  }
  EXPECT_EQ(c_signature(g, 0, 8).triple, (std::array<std::uint64_t, 3>{5, 5, 6}));
  EXPECT_TRUE(is_c_cycle_regular(g, 8));
}

TEST(Cycles, VertexTransitiveImpliesCycleRegular) {
  for (const auto& g : {x_graph(9), y_graph(9), x_graph(11), prism(9)}) {
    ASSERT_TRUE(is_vertex_transitive(g));
    const int gi = girth(g);
    for (int c = gi; c <= gi + 4; ++c) {
      EXPECT_TRUE(is_c_cycle_regular(g, c)) << c;
      EXPECT_TRUE(is_c_vertex_regular(g, c)) << c;
    }
  }
}

TEST(Cycles, CycleRegularImpliesVertexRegular) {
  for (int r = 1; r < 18; ++r)
    for (int s = r + 1; s < 18; s += 2) {
      SimpleGraph g;
      try {
        g = t1(9, r, s);
      } catch (...) {
        continue;
      }
      for (int c = 5; c <= 8; ++c)
        if (is_c_cycle_regular(g, c)) EXPECT_TRUE(is_c_vertex_regular(g, c));
    }
}

TEST(Cycles, RejectsShortLengths) {
  EXPECT_THROW(count_cycles(prism(4), 2), std::invalid_argument);
  EXPECT_THROW(cycles_through_edge(prism(4), 0, 2, 4), std::invalid_argument);
}
