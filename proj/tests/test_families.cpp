#include <gtest/gtest.h>

#include <numeric>

#include "tricirc/error.hpp"
#include "tricirc/families.hpp"
#include "tricirc/symmetry.hpp"
#include "tricirc/verify.hpp"

using namespace tricirc;

namespace {

std::vector<int> orbit_sizes(const Permutation& p) {
  std::vector<int> out;
  for (const auto& c : p.cycles()) out.push_back(static_cast<int>(c.size()));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(Families, RStar) {
  EXPECT_EQ(r_star(9), 6);
  EXPECT_EQ(r_star(11), 18);
  EXPECT_EQ(r_star(13), 8);
  EXPECT_EQ(r_star(15), 24);
  EXPECT_THROW(r_star(10), std::invalid_argument);
  EXPECT_THROW(r_star(1), std::invalid_argument);
}

TEST(Families, XAndYDefinitions) {
  EXPECT_EQ(x_graph(9), t1(9, 6, 1));
  EXPECT_EQ(y_graph(9), t2(9, 2, 1));
  EXPECT_THROW(y_graph(10), std::invalid_argument);
}

TEST(Families, FibreLabels) {
  const SimpleGraph g = x_graph(9);
  EXPECT_EQ(g.vertex_label(0), "u0");
  EXPECT_EQ(g.vertex_label(18 + 5), "v5");
  EXPECT_EQ(g.cover_vertex(36 + 17), (CoverVertex{2, 17}));
  EXPECT_EQ(g.tag(0, 9), EdgeTag::K);
  EXPECT_EQ(g.tag(0, 18), EdgeTag::Zero);
  EXPECT_EQ(g.tag(18, 36 + 6), EdgeTag::R);
  EXPECT_EQ(g.tag(18, 36 + 1), EdgeTag::S);
}

TEST(Families, LaddersAndPetersen) {
  EXPECT_TRUE(prism(5).is_regular(3));
  EXPECT_EQ(moebius(4).order(), 8);
  // K_{3,3}: every vertex adjacent to exactly the three of the other colour
  const SimpleGraph k33 = moebius(3);
  for (int a = 0; a < 6; ++a)
    for (int b = a + 1; b < 6; ++b) EXPECT_EQ(k33.adjacent(a, b), (a + b) % 2 == 1);
  EXPECT_THROW(gp(10, 5), std::invalid_argument);
  EXPECT_TRUE(gp(5, 2).is_regular(3));
  EXPECT_EQ(gp(33, -10), gp(33, 23));
}

TEST(Families, RhoIsAnAutomorphismOfEveryType) {
  for (int type = 1; type <= 4; ++type)
    for (int k = 3; k <= 10; ++k) {
      const Permutation rho = known_automorphism(KnownAutomorphism::Rho, k);
      EXPECT_EQ(orbit_sizes(rho), std::vector<int>(3, 2 * k));
      for (int r = 0; r < 2 * k; ++r)
        for (int s = 0; s < 2 * k; s += 3) {
          try {
            EXPECT_TRUE(is_automorphism(build({type, k, r, s}), rho));
          } catch (const NonSimpleCover&) {
          }
        }
    }
}

TEST(Families, PhiXOnX) {
  for (int k = 9; k <= 21; k += 2) {
    const Permutation phi = known_automorphism(KnownAutomorphism::PhiX, k);
    EXPECT_TRUE(is_automorphism(x_graph(k), phi)) << k;
    // <rho, phi> is transitive
    const std::vector<Permutation> gens{known_automorphism(KnownAutomorphism::Rho, k), phi};
    EXPECT_EQ(orbits(6 * k, gens).count(), 1) << k;
  }
}

TEST(Families, BicirculantMapOnX) {
  for (int k = 9; k <= 21; k += 2) {
    if (k % 3 == 0) continue;
    const Permutation phi = known_automorphism(KnownAutomorphism::PhiT1Bic, k);
    EXPECT_TRUE(is_automorphism(x_graph(k), phi)) << k;
    EXPECT_EQ(orbit_sizes(phi), (std::vector<int>{3 * k, 3 * k})) << k;
  }
}

TEST(Families, PhiYOnY) {
  for (int k = 9; k <= 21; k += 2) {
    const Permutation phi = known_automorphism(KnownAutomorphism::PhiY, k);
    EXPECT_TRUE(is_automorphism(y_graph(k), phi)) << k;
  }
  EXPECT_EQ(orbit_sizes(known_automorphism(KnownAutomorphism::PhiY, 9)), std::vector<int>(6, 9));
}

TEST(Families, NegationOnType4) {
  for (int k = 3; k <= 12; ++k)
    for (int r = 0; r < 2 * k; ++r)
      for (int s = 0; s < 2 * k; ++s) {
        try {
          EXPECT_TRUE(is_automorphism(t4(k, r, s), known_automorphism(KnownAutomorphism::Negation, k)));
        } catch (const NonSimpleCover&) {
        }
      }
}

TEST(Families, ParseKnownAutomorphism) {
  EXPECT_EQ(parse_known_automorphism("phi_y"), KnownAutomorphism::PhiY);
  EXPECT_THROW(parse_known_automorphism("psi"), std::invalid_argument);
}

TEST(Families, TorusDecompositionOfY) {
  for (int k = 9; k <= 21; k += 2) {
    const SimpleGraph g = y_graph(k);
    const TorusDecomposition t = torus_cycle_decomposition(g, k);
    EXPECT_EQ(t.c1.size(), static_cast<std::size_t>(2 * k));
    EXPECT_EQ(t.c2.size(), static_cast<std::size_t>(2 * k));
    EXPECT_EQ(t.c3.size(), static_cast<std::size_t>(2 * k));
  }
  EXPECT_THROW(torus_cycle_decomposition(x_graph(9), 9), Error);
}

TEST(Families, EdgeTypeSubgraphs) {
  const std::array<EdgeTag, 2> zr{EdgeTag::Zero, EdgeTag::R};
  const ComponentSummary x = components(edge_type_subgraph(x_graph(9), zr));
  EXPECT_EQ(x.count, 6);
  EXPECT_EQ(x.sizes, std::vector<int>(6, 9));
  EXPECT_TRUE(x.all_cycles);

  const ComponentSummary t3c = components(edge_type_subgraph(t3(9, 1), zr));
  EXPECT_EQ(t3c.count, 1);
  EXPECT_EQ(t3c.sizes, std::vector<int>{54});
  EXPECT_TRUE(t3c.all_cycles);

  const std::array<EdgeTag, 1> s{EdgeTag::S};
  const SimpleGraph ys = edge_type_subgraph(y_graph(9), s);
  int cycle_vertices = 0;
  for (int v = 0; v < ys.order(); ++v) {
    if (ys.degree(v) == 0) continue;
    EXPECT_EQ(ys.degree(v), 2);
    EXPECT_EQ(ys.cover_vertex(v).base, 1) << "S-edges live on fibre V";
    ++cycle_vertices;
  }
  EXPECT_EQ(cycle_vertices, 18);
  EXPECT_EQ(components(edge_type_subgraph(y_graph(9), s)).sizes.back(), 18);

  EXPECT_THROW(edge_type_subgraph(prism(5), s), Error);
}

// T_1(k,r,s) = T_1(k,s,r); T_i(k,ar,as) = T_i(k,r,s) for units a;
// T_2(k,r,s) and T_2(k,r,-s) are the same graph; T_4 under +-r, +-s and
// swapping. Exhaustive for k <= 9.
TEST(Families, ParameterIsomorphismIdentities) {
  for (int k = 3; k <= 9; ++k) {
    const int n = 2 * k;
    std::vector<int> units;
    for (int a = 1; a < n; ++a)
      if (std::gcd(a, n) == 1) units.push_back(a);
    for (int r = 0; r < n; ++r)
      for (int s = 0; s < n; ++s) {
        auto canon = [&](int type, int rr, int ss) -> std::optional<std::string> {
          try {
            return canonical_form(build({type, k, rr % n, ss % n}));
          } catch (const NonSimpleCover&) {
            return std::nullopt;
          }
        };
        const auto c1 = canon(1, r, s);
        EXPECT_EQ(c1, canon(1, s, r));
        const auto c2 = canon(2, r, s);
        const auto c4 = canon(4, r, s);
        EXPECT_EQ(c4, canon(4, n - r, s));
        EXPECT_EQ(c4, canon(4, r, n - s));
        EXPECT_EQ(c4, canon(4, s, r));
        for (int a : units) {
          EXPECT_EQ(c1, canon(1, a * r, a * s)) << k << " " << a;
          EXPECT_EQ(c2, canon(2, a * r, a * s)) << k << " " << a;
          EXPECT_EQ(c4, canon(4, a * r, a * s)) << k << " " << a;
        }
        try {
          EXPECT_EQ(t2(k, r, s), t2(k, r, (n - s) % n));
        } catch (const NonSimpleCover&) {
          EXPECT_THROW(t2(k, r, (n - s) % n), NonSimpleCover);
        }
      }
  }
}

TEST(Families, ReducedParametersCoverEveryOrbit) {
  for (int type = 1; type <= 4; ++type)
    for (int k = 3; k <= 7; ++k) {
      std::set<std::string> reps, all;
      for (const auto& p : reduced_parameters(type, k)) {
        try {
          reps.insert(canonical_form(build(p)));
        } catch (const NonSimpleCover&) {
        }
      }
      for (int r = 0; r < 2 * k; ++r)
        for (int s = 0; s < (type == 3 ? 1 : 2 * k); ++s) {
          try {
            all.insert(canonical_form(build({type, k, r, s})));
          } catch (const NonSimpleCover&) {
          }
        }
      EXPECT_EQ(reps, all) << "type " << type << " k " << k;
    }
}
