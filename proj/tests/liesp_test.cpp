#include "sympma/grassmann.hpp"
#include "sympma/linalg.hpp"
#include "sympma/liesp.hpp"
#include "test_util.hpp"

#include <gtest/gtest.h>

namespace sma {
namespace {

using test::c;
using test::u;

MAEquation eq4(const Polynomial& p) { return MAEquation::from_polynomial(4, p); }

Polynomial sq(const Polynomial& p) { return p * p; }

struct NormalForm {
  const char* name;
  Polynomial poly;
  int dim;
};

std::vector<NormalForm> normal_forms() {
  return {
      {"linear wave", u(4, 1, 1) - u(4, 2, 2) - u(4, 3, 3) - u(4, 4, 4), 16},
      {"second heavenly", u(4, 1, 3) + u(4, 2, 4) + u(4, 1, 1) * u(4, 2, 2) - sq(u(4, 1, 2)), 14},
      {"modified heavenly", u(4, 1, 3) - u(4, 1, 2) * u(4, 4, 4) + u(4, 1, 4) * u(4, 2, 4), 13},
      {"first heavenly", u(4, 1, 3) * u(4, 2, 4) - u(4, 1, 4) * u(4, 2, 3) - c(4, 1), 13},
      {"Husain", u(4, 1, 1) + u(4, 2, 2) + u(4, 1, 3) * u(4, 2, 4) - u(4, 1, 4) * u(4, 2, 3), 12},
      {"general heavenly",
       u(4, 1, 2) * u(4, 3, 4) + Rational(2) * u(4, 1, 3) * u(4, 2, 4) - Rational(3) * u(4, 1, 4) * u(4, 2, 3), 12},
  };
}

RatVector unit(int n, int g) {
  RatVector v = zero_vector(sp_dimension(n));
  v(g) = 1;
  return v;
}

TEST(SpGenerators, CountAndLabels) {
  for (int n = 1; n <= 4; ++n) EXPECT_EQ(static_cast<int>(sp_generators(n).size()), n * (2 * n + 1));
  EXPECT_EQ(sp_generators(4)[0].label(), "X11");
  EXPECT_EQ(generator_index(4, "X21"), generator_index(4, "X12"));
  EXPECT_NE(generator_index(4, "L21"), generator_index(4, "L12"));
  EXPECT_EQ(parse_sp_element(4, format_sp_element(4, parse_sp_element(4, "2L11 + L22 - 1/2P12"))),
            parse_sp_element(4, "2*L11 + L22 - 1/2P12"));
  EXPECT_EQ(format_sp_element(4, zero_vector(36)), "0");
}

TEST(SpAction, GeneratorExamples) {
  const auto& gens = sp_generators(2);
  const SpGenerator X11 = gens[generator_index(2, "X11")];
  EXPECT_EQ(apply_generator(2, X11, u(2, 1, 1)), c(2, 1));
  EXPECT_EQ(apply_generator(2, X11, u(2, 1, 1) * u(2, 2, 2) - sq(u(2, 1, 2))), u(2, 2, 2));
  const SpGenerator L12 = sp_generators(4)[generator_index(4, "L12")];
  EXPECT_EQ(apply_generator(4, L12, u(4, 1, 1)), Rational(2) * u(4, 1, 2));
}

TEST(SpAction, ConstantElementUnderWeightedAction) {
  for (const auto& g : sp_generators(4)) {
    const Polynomial image = apply_generator(4, g, c(4, 1));
    switch (g.kind) {
      case GeneratorKind::X: EXPECT_TRUE(image.is_zero()); break;
      case GeneratorKind::L: EXPECT_EQ(image, c(4, g.i == g.j ? -1 : 0)); break;
      case GeneratorKind::P: EXPECT_EQ(image, Rational(-2) * u(4, g.i + 1, g.j + 1)); break;
    }
  }
}

TEST(SpActionProperty, EveryGeneratorPreservesTheMinorSpan) {
  for (int n = 2; n <= 4; ++n) {
    const MinorBasis& b = minor_basis(n);
    for (const auto& g : sp_generators(n))
      for (Index k = 0; k < b.size(); ++k)
        EXPECT_TRUE(decompose(apply_generator(n, g, b.polys[k]), b).has_value()) << g.label() << " on " << k;
  }
}

TEST(SpActionProperty, ActionMatricesRepresentTheBracket) {
  for (int n = 2; n <= 4; ++n) {
    const int d = sp_dimension(n);
    const int stride = n == 4 ? 5 : 1;
    for (int a = 0; a < d; a += stride)
      for (int b = (n == 4 ? a % 3 : 0); b < d; b += (n == 4 ? 3 : 1)) {
        const RatMatrix& A = generator_action_matrix(n, a);
        const RatMatrix& B = generator_action_matrix(n, b);
        EXPECT_EQ(action_matrix(n, sp_bracket(n, unit(n, a), unit(n, b))), RatMatrix(A * B - B * A))
            << n << " " << a << " " << b;
      }
  }
}

TEST(SpActionProperty, FullAlgebraIsClosedAndSemisimple) {
  std::vector<RatVector> all;
  for (int g = 0; g < 36; ++g) all.push_back(unit(4, g));
  const LieSubalgebra full = LieSubalgebra::span_of(4, all);
  EXPECT_EQ(full.dim(), 36);
  const AlgebraSummary s = analyze(full);
  EXPECT_EQ(s.center_dim, 0);
  EXPECT_EQ(s.radical_dim, 0);
  EXPECT_EQ(s.derived_dim, 36);
  EXPECT_TRUE(s.reductive);
}

TEST(SpBracketProperty, AntisymmetryAndJacobi) {
  Rng rng(41);
  for (int trial = 0; trial < 10; ++trial) {
    RatVector x = zero_vector(36), y = zero_vector(36), z = zero_vector(36);
    for (int k = 0; k < 4; ++k) {
      x(rng() % 36) = random_integer(rng, 3);
      y(rng() % 36) = random_integer(rng, 3);
      z(rng() % 36) = random_integer(rng, 3);
    }
    EXPECT_EQ(sp_bracket(4, x, y), RatVector(-sp_bracket(4, y, x)));
    const RatVector jac = sp_bracket(4, x, sp_bracket(4, y, z)) + sp_bracket(4, y, sp_bracket(4, z, x)) +
                          sp_bracket(4, z, sp_bracket(4, x, y));
    EXPECT_TRUE(is_zero(jac));
  }
}

TEST(Symmetry, DimensionsOfNormalForms) {
  for (const auto& f : normal_forms()) EXPECT_EQ(symmetry_algebra(eq4(f.poly)).dim(), f.dim) << f.name;
}

TEST(Symmetry, PrintedGeneratorsStabilize) {
  const std::vector<std::pair<Polynomial, std::vector<const char*>>> rows = {
      {u(4, 1, 1) - u(4, 2, 2) - u(4, 3, 3) - u(4, 4, 4),
       {"X11+X22", "X11+X33", "X11+X44", "X12", "X13", "X14", "X23", "X24", "X34", "L11+L22+L33+L44",
        "L12+L21", "L13+L31", "L14+L41", "L23-L32", "L24-L42", "L34-L43"}},
      // second heavenly in the index order (13)(24)
      {u(4, 1, 3) + u(4, 2, 4) + u(4, 3, 3) * u(4, 4, 4) - sq(u(4, 3, 4)),
       {"X11", "X12", "X13-X24", "X14", "X22", "X23", "X33-L24", "X34+2L23", "X44-L13", "L12-L43", "L21-L34",
        "L14-L23", "2L11+L22+L44", "L11+2L22+L33"}},
      {u(4, 1, 3) - u(4, 1, 2) * u(4, 4, 4) + u(4, 1, 4) * u(4, 2, 4),
       {"X11", "X22", "X23", "X24-L34", "X33", "X34", "X44+L32", "L11", "L22+L33", "2L33+L44", "L24", "P11",
        "P44-2L23"}},
      {u(4, 1, 3) * u(4, 2, 4) - u(4, 1, 4) * u(4, 2, 3) - c(4, 1),
       {"X11", "X12", "X22", "X33", "X34", "X44", "L12", "L21", "L34", "L43", "L11-L22", "L33-L44",
        "L11+L22-L33-L44"}},
      {u(4, 1, 1) + u(4, 2, 2) + u(4, 1, 3) * u(4, 2, 4) - u(4, 1, 4) * u(4, 2, 3),
       {"X11-X22", "X12", "X33", "X34", "X44", "L11+L22", "L12-L21", "L33-L44", "L34", "L43", "P11-P22", "P12"}},
      {normal_forms()[5].poly,
       {"X11", "X22", "X33", "X44", "L11", "L22", "L33", "L44", "P11", "P22", "P33", "P44"}},
  };
  for (const auto& [poly, gens] : rows) {
    const MAEquation e = eq4(poly);
    const LieSubalgebra g = symmetry_algebra(e);
    std::vector<RatVector> printed;
    for (const char* text : gens) {
      const RatVector v = parse_sp_element(4, text);
      EXPECT_TRUE(stabilizes(e, v)) << text;
      EXPECT_TRUE(g.contains(v)) << text;
      printed.push_back(v);
    }
    EXPECT_EQ(rank(columns_to_matrix(printed, 36)), g.dim());
  }
}

TEST(SymmetryProperty, ComputedAlgebrasAreClosed) {
  for (const auto& f : normal_forms()) {
    const LieSubalgebra g = symmetry_algebra(eq4(f.poly));
    for (int i = 0; i < g.dim(); ++i)
      for (int j = i + 1; j < g.dim(); ++j) EXPECT_TRUE(g.contains(sp_bracket(4, g.basis[i], g.basis[j]))) << f.name;
  }
}

TEST(SymmetryProperty, DimensionInvariantUnderTranslateAndLegendre) {
  Rng rng(42);
  for (const auto& f : normal_forms()) {
    const MAEquation e = eq4(f.poly);
    const MAEquation moved = translate(e, test::random_symmetric(rng, 4, 3));
    EXPECT_EQ(symmetry_algebra(moved).dim(), f.dim) << f.name;
    std::vector<int> S;
    for (int i = 0; i < 4; ++i)
      if (rng() % 2) S.push_back(i);
    if (S.empty()) S.push_back(static_cast<int>(rng() % 4));
    EXPECT_EQ(symmetry_algebra(partial_legendre(e, S)).dim(), f.dim) << f.name;
  }
}

TEST(Reductive, TableAndTrivialCases) {
  const auto forms = normal_forms();
  EXPECT_TRUE(is_reductive(symmetry_algebra(eq4(forms[5].poly))));
  const LieSubalgebra husain = symmetry_algebra(eq4(forms[4].poly));
  EXPECT_FALSE(is_reductive(husain));
  EXPECT_EQ(analyze(husain).radical_dim, 3);

  std::vector<std::vector<RatVector>> abelian(3, std::vector<RatVector>(3, zero_vector(3)));
  const LieSubalgebra a = LieSubalgebra::from_structure(abelian);
  EXPECT_TRUE(is_reductive(a));
  EXPECT_EQ(analyze(a).center_dim, 3);
}

TEST(Reductive, KillingFormIsSymmetric) {
  const LieSubalgebra g = symmetry_algebra(eq4(normal_forms()[4].poly));
  const RatMatrix k = killing_form(g);
  EXPECT_EQ(k, RatMatrix(k.transpose()));
}

TEST(Nondegenerate, Examples) {
  const MAEquation first = eq4(normal_forms()[3].poly);
  std::vector<Rational> pt(10, Rational(0));
  pt[chart_index(4, 0, 2)] = 1;
  pt[chart_index(4, 1, 3)] = 1;
  EXPECT_EQ(rank(symbol_matrix(first, pt)), 4);
  EXPECT_TRUE(nondegenerate(first));
  EXPECT_FALSE(nondegenerate(eq4(u(4, 1, 1) * u(4, 2, 2) - sq(u(4, 1, 2)))));
  EXPECT_TRUE(nondegenerate(eq4(u(4, 1, 1) + u(4, 2, 2) + u(4, 3, 3) + u(4, 4, 4))));
  for (const auto& f : normal_forms()) EXPECT_TRUE(nondegenerate(eq4(f.poly))) << f.name;
}

// Some Legendre chart has a zero of the equation where O_1 lies in the
// hyperplane.
bool osculates_somewhere(const MAEquation& e, Rng& rng) {
  for (unsigned mask = 0; mask < 8; ++mask) {
    std::vector<int> S;
    for (int i = 0; i < 3; ++i)
      if (mask & (1u << i)) S.push_back(i);
    const MAEquation chart = S.empty() ? e : partial_legendre(e, S);
    std::vector<RatMatrix> points{zero_matrix(3, 3)};
    for (int k = 0; k < 4; ++k)
      if (auto z = sample_zero(chart.poly(), rng, 5)) {
        RatVector v(6);
        for (int i = 0; i < 6; ++i) v(i) = (*z)[i];
        points.push_back(matrix_from_chart(3, v));
      }
    for (const auto& p : points)
      if (chart.poly().evaluate(chart_point(p)).is_zero() &&
          osculating_containment(chart, LagrangePoint::affine(p)))
        return true;
  }
  return false;
}

TEST(SymmetryProperty, LinearisabilityAgreesWithOsculation) {
  Rng rng(43);
  const Polynomial det3 = poly_determinant(symbolic_hessian(3));
  const std::vector<std::pair<Polynomial, bool>> set = {
      {u(3, 1, 1) + u(3, 2, 2) + u(3, 3, 3), true},
      {det3 - (u(3, 1, 1) * u(3, 2, 2) - sq(u(3, 1, 2)) + u(3, 1, 1) * u(3, 3, 3) - sq(u(3, 1, 3)) +
               u(3, 2, 2) * u(3, 3, 3) - sq(u(3, 2, 3))),
       true},
      {u(3, 1, 1) + u(3, 2, 2) + u(3, 3, 3) - c(3, 1), true},
      {det3 - c(3, 1), false},
      {det3 - u(3, 1, 1) - u(3, 2, 2) - u(3, 3, 3), false},
  };
  for (const auto& [poly, linear] : set) {
    const MAEquation e = MAEquation::from_polynomial(3, poly);
    const bool by_symmetry = nondegenerate(e) && symmetry_algebra(e).dim() == 9;
    EXPECT_EQ(by_symmetry, linear) << poly.to_string();
    EXPECT_EQ(osculates_somewhere(e, rng), by_symmetry) << poly.to_string();
  }
}

}  // namespace
}  // namespace sma
