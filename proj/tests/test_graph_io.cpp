#include <gtest/gtest.h>

#include <random>

#include "tricirc/error.hpp"
#include "tricirc/families.hpp"
#include "tricirc/graph_io.hpp"
#include "tricirc/symmetry.hpp"
#include "tricirc/voltage.hpp"

using namespace tricirc;

namespace {

SimpleGraph random_graph(int n, double p, std::mt19937& rng) {
  SimpleGraph g(n);
  std::bernoulli_distribution coin(p);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (coin(rng)) g.add_edge(a, b);
  return g;
}

bool same_edges(const SimpleGraph& a, const SimpleGraph& b) {
  return a.order() == b.order() && a.edges() == b.edges();
}

}  // namespace

TEST(Graph6, KnownStrings) {
  SimpleGraph k2(2);
  k2.add_edge(0, 1);
  EXPECT_EQ(encode_graph6(k2), "A_");
  EXPECT_EQ(encode_graph6(SimpleGraph(0)), "?");
  // Petersen graph
  EXPECT_EQ(encode_graph6(gp(5, 2)).size(), 1u + 8u);
  EXPECT_TRUE(are_isomorphic(decode_graph6("IheA@GUAo"), gp(5, 2)));
}

TEST(Graph6, RoundTripRandom) {
  std::mt19937 rng(11);
  for (int n : {0, 1, 2, 5, 6, 7, 62, 63, 64, 100, 258, 600}) {
    const SimpleGraph g = random_graph(n, n > 100 ? 0.02 : 0.3, rng);
    const std::string s = encode_graph6(g);
    EXPECT_TRUE(same_edges(decode_graph6(s), g)) << n;
    EXPECT_TRUE(same_edges(decode_graph6(">>graph6<<" + s + "\n"), g)) << n;
  }
}

TEST(Graph6, LongHeader) {
  const std::string s = encode_graph6(SimpleGraph(100));
  EXPECT_EQ(s[0], '~');
  EXPECT_EQ(decode_graph6(s).order(), 100);
}

TEST(Graph6, Malformed) {
  EXPECT_THROW(decode_graph6("garbage~~"), Graph6Error);
  EXPECT_THROW(decode_graph6(""), Graph6Error);
  EXPECT_THROW(decode_graph6("A"), Graph6Error);    // body too short
  EXPECT_THROW(decode_graph6("A__"), Graph6Error);  // body too long
  EXPECT_THROW(decode_graph6("A`"), Graph6Error);   // padding bit set
  EXPECT_THROW(decode_graph6("A\x1f"), Graph6Error);
  EXPECT_THROW(decode_graph6("~??B?"), Graph6Error);  // long form for n = 3
}

TEST(EdgeList, RoundTripAndErrors) {
  std::mt19937 rng(5);
  const SimpleGraph g = random_graph(30, 0.2, rng);
  EXPECT_TRUE(same_edges(parse_edge_list(to_edge_list(g)), g));
  EXPECT_THROW(parse_edge_list("3 1\n0 3\n"), std::invalid_argument);
  EXPECT_THROW(parse_edge_list("3 2\n0 1\n"), std::invalid_argument);
  EXPECT_THROW(parse_edge_list("3 1\n1 1\n"), std::invalid_argument);
}

TEST(ParseGraph, Autodetect) {
  const SimpleGraph x = x_graph(9);
  EXPECT_TRUE(same_edges(parse_graph(encode_graph6(x) + "\n"), x));
  EXPECT_TRUE(same_edges(parse_graph(to_edge_list(x)), x));
}

TEST(Dot, ContainsFibresAndTags) {
  const std::string dot = to_dot(t1(9, 6, 1));
  EXPECT_NE(dot.find("graph"), std::string::npos);
  EXPECT_NE(dot.find("u0"), std::string::npos);
  EXPECT_NE(dot.find("w17"), std::string::npos);
}

TEST(PregraphText, RoundTrip) {
  for (int d = 1; d <= 4; ++d) {
    const VoltageAssignment va = tricirculant_voltages(d, 9, 2, 1);
    const VoltageAssignment back = parse_pregraph_text(to_pregraph_text(va));
    EXPECT_EQ(back.modulus, va.modulus);
    EXPECT_EQ(back.zeta, va.zeta);
    EXPECT_EQ(back.base.num_darts(), va.base.num_darts());
    for (int a = 0; a < va.base.num_darts(); ++a) {
      EXPECT_EQ(back.base.beg(a), va.base.beg(a));
      EXPECT_EQ(back.base.inv(a), va.base.inv(a));
    }
  }
  EXPECT_THROW(parse_pregraph_text("pregraph 1 1 4\ndart 0 0 0 1\n"), std::invalid_argument);
  EXPECT_THROW(parse_pregraph_text("nonsense"), std::invalid_argument);
}
