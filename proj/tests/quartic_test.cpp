#include "sympma/quartic.hpp"
#include "sympma/sampling.hpp"

#include <gtest/gtest.h>

namespace sma {
namespace {

BinaryQuartic Q(std::array<long, 5> low_to_high) { return BinaryQuartic::from_coeffs(low_to_high); }

// Random integer matrix of determinant 1, as a product of elementary moves.
std::array<Rational, 4> random_sl2(Rng& rng) {
  Rational a = 1, b = 0, c = 0, d = 1;
  for (int step = 0; step < 4; ++step) {
    const Rational k = random_integer(rng, 3);
    if (step % 2 == 0) {
      b += k * a;
      d += k * c;
    } else {
      a += k * b;
      c += k * d;
    }
  }
  return {a, b, c, d};
}

TEST(Quartic, PatternsOfCanonicalRepresentatives) {
  EXPECT_EQ(multiplicity_pattern(Q({1, 0, 0, 0, 0})), (std::vector<int>{4}));
  EXPECT_EQ(multiplicity_pattern(Q({0, 1, 0, 0, 0})), (std::vector<int>{3, 1}));
  EXPECT_EQ(multiplicity_pattern(Q({0, 0, 1, 0, 0})), (std::vector<int>{2, 2}));
  EXPECT_EQ(multiplicity_pattern(Q({-1, 0, 1, 0, 0})), (std::vector<int>{2, 1, 1}));
  EXPECT_EQ(multiplicity_pattern(Q({0, -1, 0, 1, 0})), (std::vector<int>{1, 1, 1, 1}));
  EXPECT_EQ(multiplicity_pattern(Q({2, -1, -2, 1, 0})), (std::vector<int>{1, 1, 1, 1}));
  EXPECT_EQ(multiplicity_pattern(Q({1, 4, 6, 4, 1})), (std::vector<int>{4}));  // (t + 1)^4
  EXPECT_EQ(multiplicity_pattern(Q({1, 0, -2, 0, 1})), (std::vector<int>{2, 2}));
  EXPECT_THROW(multiplicity_pattern(Q({0, 0, 0, 0, 0})), Error);
}

TEST(Quartic, Invariants) {
  const auto quartic4 = quartic_invariants(Q({-1, 0, 0, 0, 1}));
  EXPECT_EQ(quartic4.I, Rational(-1));
  EXPECT_EQ(quartic4.J, Rational(0));
  EXPECT_TRUE(quartic4.harmonic());
  EXPECT_TRUE(quartic_invariants(Q({0, -1, 0, 1, 0})).harmonic());
  const auto t4 = quartic_invariants(Q({0, 0, 0, 0, 1}));
  EXPECT_EQ(t4.I, 0);
  EXPECT_EQ(t4.J, 0);
  EXPECT_EQ(t4.discriminant, 0);
  EXPECT_FALSE(quartic_invariants(Q({2, -1, -2, 1, 0})).harmonic());
}

TEST(Quartic, SquareFreeDecompositionRecoversFactors) {
  // (t - 1)^2 (t + 2)
  const UniPoly p(std::vector<Rational>{2, -3, 0, 1});
  const auto f = squarefree_decomposition(p);
  ASSERT_EQ(f.size(), 2u);
  EXPECT_EQ(f[0], UniPoly(std::vector<Rational>{2, 1}));
  EXPECT_EQ(f[1], UniPoly(std::vector<Rational>{-1, 1}));
}

TEST(Quartic, Sl2ActionMatchesDefinition) {
  // t -> t + 1 on t^2 - 1 gives t^2 + 2t.
  EXPECT_EQ(sl2_act(Q({-1, 0, 1, 0, 0}), 1, 1, 0, 1), Q({0, 2, 1, 0, 0}));
  // The inversion t -> 1/t swaps the roles of 0 and infinity.
  EXPECT_EQ(sl2_act(Q({0, 1, 0, 0, 0}), 0, 1, 1, 0), Q({0, 0, 0, 1, 0}));
}

TEST(QuarticProperty, PatternsAndInvariantsAreSl2Invariant) {
  Rng rng(21);
  for (int trial = 0; trial < 60; ++trial) {
    BinaryQuartic q;
    for (auto& x : q.a) x = random_integer(rng, 4);
    if (trial % 5 == 0) q = Q({0, -1, 0, 1, 0});
    if (trial % 5 == 1) q = Q({-1, 0, 1, 0, 0});
    if (q.is_zero()) continue;
    const auto [a, b, c, d] = random_sl2(rng);
    ASSERT_EQ(a * d - b * c, 1);
    const BinaryQuartic g = sl2_act(q, a, b, c, d);
    EXPECT_EQ(multiplicity_pattern(g), multiplicity_pattern(q));
    const auto i0 = quartic_invariants(q), i1 = quartic_invariants(g);
    EXPECT_EQ(i0.I, i1.I);
    EXPECT_EQ(i0.J, i1.J);
  }
}

}  // namespace
}  // namespace sma
