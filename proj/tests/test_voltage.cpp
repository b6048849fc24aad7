#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "tricirc/error.hpp"
#include "tricirc/families.hpp"
#include "tricirc/symmetry.hpp"
#include "tricirc/voltage.hpp"

using namespace tricirc;

TEST(SymbolicVoltage, NormalizeEvaluatePrint) {
  const SymbolicVoltage v{1, -2, 3};
  EXPECT_EQ(v.normalized(), (SymbolicVoltage{1, 2, -3}));
  EXPECT_EQ((-v).normalized(), v.normalized());
  EXPECT_EQ(v.evaluate(9, 6, 1), 0);  // 3 - 12 + 9
  EXPECT_EQ((SymbolicVoltage{1, 3, -2}).to_string(), "k+3r-2s");
  EXPECT_EQ((SymbolicVoltage{0, 0, 0}).to_string(), "0");
  EXPECT_EQ((SymbolicVoltage{1, 0, 0} + SymbolicVoltage{1, 0, 0}), SymbolicVoltage{});
}

TEST(Voltage, SymbolicZetaIsAntisymmetric) {
  for (int i = 1; i <= 4; ++i) {
    const auto z = symbolic_zeta(i);
    const Pregraph& p = delta(i);
    for (int d = 0; d < p.num_darts(); ++d) {
      if (p.inv(d) == d)
        EXPECT_EQ(z[d], (SymbolicVoltage{1, 0, 0}));
      else
        EXPECT_EQ(z[p.inv(d)], -z[d]);
    }
  }
}

TEST(Voltage, CoverSizeAndValence) {
  std::mt19937 rng(7);
  for (int type = 1; type <= 4; ++type)
    for (int k = 1; k <= 9; ++k) {
      std::uniform_int_distribution<int> pick(0, 2 * k - 1);
      for (int trial = 0; trial < 12; ++trial) {
        const int r = pick(rng), s = pick(rng);
        SimpleGraph g;
        try {
          g = build({type, k, r, s});
        } catch (const NonSimpleCover&) {
          continue;
        }
        EXPECT_EQ(g.order(), 6 * k);
        EXPECT_EQ(g.size(), static_cast<std::size_t>(9 * k));
        EXPECT_TRUE(g.is_regular(3));
        EXPECT_EQ(g.fibre_size(), 2 * k);
      }
    }
}

TEST(Voltage, NonSimpleCoversAreRejected) {
  EXPECT_THROW(t1(9, 4, 4), NonSimpleCover);   // parallel v-w links
  EXPECT_THROW(t2(9, 0, 1), NonSimpleCover);   // u-w links collapse
  EXPECT_THROW(t4(9, 0, 1), NonSimpleCover);   // loop of voltage 0
}

TEST(Voltage, ConnectivityAgreesWithSearch) {
  for (int type = 1; type <= 4; ++type)
    for (int k = 1; k <= 8; ++k)
      for (int r = 0; r < 2 * k; ++r)
        for (int s = 0; s < (type == 3 ? 1 : 2 * k); ++s) {
          const FamilyParams p{type, k, r, s};
          try {
            const SimpleGraph g = build(p);
            EXPECT_EQ(p.connected(), g.is_connected()) << p.to_string();
            if (type == 1) EXPECT_EQ(t1_connected_by_gcd(k, r, s), g.is_connected()) << p.to_string();
          } catch (const NonSimpleCover&) {
          }
        }
}

TEST(Voltage, ClosedWalksLiftToClosedWalksIffNetZero) {
  const int k = 9, r = 6, s = 1;
  const VoltageAssignment va = tricirculant_voltages(1, k, r, s);
  const SimpleGraph g = derived_cover(va);
  const Pregraph& base = va.base;
  for (int len = 1; len <= 6; ++len)
    for (int x = 0; x < 3; ++x)
      for (const Walk& w : reduced_closed_walks(base, x, len)) {
        // follow the lift from (x, 0)
        int at = 0;
        int cur = x;
        for (int d : w.darts) {
          const int next = base.end(d);
          const int a = g.vertex_id(cur, at), b = g.vertex_id(next, at + va.zeta[d]);
          ASSERT_TRUE(g.adjacent(a, b));
          at = (at + va.zeta[d]) % (2 * k);
          cur = next;
        }
        EXPECT_EQ(at == 0, net_voltage(va, w) == 0);
        EXPECT_EQ(net_voltage(va, w), raw_symbolic_net_voltage(1, w).evaluate(k, r, s));
      }
}

TEST(Voltage, QuotientByRhoRecoversDelta) {
  const std::vector<FamilyParams> cases{{1, 9, 6, 1}, {2, 9, 2, 1}, {3, 9, 1, 0}, {4, 9, 1, 2}, {1, 10, 3, 7}};
  for (const auto& p : cases) {
    const SimpleGraph g = build(p);
    const Permutation rho = known_automorphism(KnownAutomorphism::Rho, p.k);
    const Pregraph q = quotient(g, rho);
    EXPECT_TRUE(pregraphs_isomorphic(q, delta(p.type))) << p.to_string();
    const VoltageAssignment va = quotient_voltages(g, rho);
    EXPECT_NO_THROW(va.validate());
    EXPECT_EQ(va.modulus, 2 * p.k);
    EXPECT_TRUE(are_isomorphic(derived_cover(va), g)) << p.to_string();
  }
}

TEST(Voltage, QuotientRejectsBadPermutations) {
  const SimpleGraph g = x_graph(9);
  std::vector<int> swap(g.order());
  std::iota(swap.begin(), swap.end(), 0);
  std::swap(swap[0], swap[1]);
  EXPECT_THROW(quotient(g, Permutation(swap)), NotAutomorphism);
  // i -> -i on both 4-cycles of the prism fixes 0
  const SimpleGraph pr = prism(4);
  const Permutation refl({0, 3, 2, 1, 4, 7, 6, 5});
  ASSERT_TRUE(is_automorphism(pr, refl));
  EXPECT_THROW(quotient(pr, refl), NotSemiregular);
}
