#include "sympma/forms.hpp"
#include "sympma/linalg.hpp"
#include "test_util.hpp"

#include <gtest/gtest.h>

namespace sma {
namespace {

using test::c;
using test::u;

MAEquation eq4(const Polynomial& p) { return MAEquation::from_polynomial(4, p); }

std::vector<std::pair<const char*, Polynomial>> six_forms() {
  return {
      {"linear wave", u(4, 1, 1) - u(4, 2, 2) - u(4, 3, 3) - u(4, 4, 4)},
      {"second heavenly", u(4, 1, 3) + u(4, 2, 4) + u(4, 1, 1) * u(4, 2, 2) - u(4, 1, 2) * u(4, 1, 2)},
      {"modified heavenly", u(4, 1, 3) - u(4, 1, 2) * u(4, 4, 4) + u(4, 1, 4) * u(4, 2, 4)},
      {"first heavenly", u(4, 1, 3) * u(4, 2, 4) - u(4, 1, 4) * u(4, 2, 3) - c(4, 1)},
      {"Husain", u(4, 1, 1) + u(4, 2, 2) + u(4, 1, 3) * u(4, 2, 4) - u(4, 1, 4) * u(4, 2, 3)},
      {"general heavenly",
       u(4, 1, 2) * u(4, 3, 4) + Rational(2) * u(4, 1, 3) * u(4, 2, 4) - Rational(3) * u(4, 1, 4) * u(4, 2, 3)},
  };
}

ExteriorForm random_form(Rng& rng, int n, int degree) {
  ExteriorForm w(n);
  for (ExteriorForm::Mask m = 0; m < (1u << (2 * n)); ++m)
    if (std::popcount(m) == degree && rng() % 3 == 0) w.add_term(m, random_integer(rng, 4));
  return w;
}

RatMatrix omega_matrix(int n) {
  RatMatrix m = zero_matrix(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) {
    m(i, n + i) = 1;
    m(n + i, i) = -1;
  }
  return m;
}

TEST(ExteriorForm, WedgeBasics) {
  const ExteriorForm a = ExteriorForm::dx(2, 0), b = ExteriorForm::du(2, 1);
  EXPECT_EQ(wedge(a, b), Rational(-1) * wedge(b, a));
  EXPECT_TRUE(wedge(a, a).is_zero());
  EXPECT_EQ(wedge(a, b).to_string(), "dx1^du2");
  EXPECT_EQ(ExteriorForm::symplectic(2).degree(), 2);
  EXPECT_EQ(wedge(ExteriorForm::symplectic(2), ExteriorForm::symplectic(2)).degree(), 4);
  EXPECT_EQ(wedge(a, b).interior(0), b);
}

TEST(ExteriorFormProperty, GradedCommutativityAndAssociativity) {
  Rng rng(51);
  for (int trial = 0; trial < 20; ++trial) {
    const int p = 1 + trial % 3, q = 1 + (trial / 3) % 3;
    const ExteriorForm a = random_form(rng, 3, p), b = random_form(rng, 3, q), c3 = random_form(rng, 3, 1);
    EXPECT_EQ(wedge(a, b), Rational((p * q) % 2 ? -1 : 1) * wedge(b, a));
    EXPECT_EQ(wedge(wedge(a, b), c3), wedge(a, wedge(b, c3)));
  }
}

TEST(Pullback, Examples) {
  EXPECT_EQ(pullback_polynomial(wedge(ExteriorForm::dx(2, 0), ExteriorForm::du(2, 0))), u(2, 1, 2));
  const ExteriorForm w = wedge(wedge(ExteriorForm::du(4, 0), ExteriorForm::du(4, 1)),
                               wedge(ExteriorForm::dx(4, 2), ExteriorForm::dx(4, 3)));
  EXPECT_EQ(pullback_polynomial(w), u(4, 1, 1) * u(4, 2, 2) - u(4, 1, 2) * u(4, 1, 2));
  const ExteriorForm omega2 = wedge(ExteriorForm::symplectic(2), ExteriorForm::symplectic(2)) * make_rational(1, 2);
  try {
    pullback_to_equation(omega2);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::PreconditionViolation);
  }
  // Omega vanishes on Lagrangian planes.
  try {
    pullback_to_equation(ExteriorForm::symplectic(2));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ZeroPullback);
  }
}

TEST(PullbackProperty, Linear) {
  Rng rng(52);
  for (int trial = 0; trial < 10; ++trial) {
    const ExteriorForm a = random_form(rng, 3, 3), b = random_form(rng, 3, 3);
    const Rational s = random_integer(rng, 5), t = random_integer(rng, 5);
    EXPECT_EQ(pullback_polynomial(s * a + t * b), s * pullback_polynomial(a) + t * pullback_polynomial(b));
  }
}

TEST(Effective, BasisSpansAllEquations) {
  for (int n = 2; n <= 4; ++n) {
    const auto& basis = effective_basis(n);
    ASSERT_EQ(static_cast<Index>(basis.size()), minor_basis(n).size());
    std::vector<RatVector> images;
    for (const auto& w : basis) {
      EXPECT_TRUE(is_effective(w));
      EXPECT_EQ(w.degree(), n);
      images.push_back(*decompose(pullback_polynomial(w), minor_basis(n)));
    }
    EXPECT_EQ(rank(columns_to_matrix(images, minor_basis(n).size())), minor_basis(n).size());
  }
  EXPECT_FALSE(is_effective(ExteriorForm::symplectic(2)));
  EXPECT_FALSE(is_effective(wedge(ExteriorForm::symplectic(3), ExteriorForm::dx(3, 0))));
}

TEST(Effective, LiftRoundTripForNormalForms) {
  for (const auto& [name, poly] : six_forms()) {
    const MAEquation e = eq4(poly);
    const ExteriorForm w = effective_lift(e);
    EXPECT_TRUE(is_effective(w)) << name;
    EXPECT_TRUE(wedge(w, ExteriorForm::symplectic(4)).is_zero()) << name;
    EXPECT_EQ(pullback_to_equation(w), e) << name;
  }
}

TEST(EffectiveProperty, RandomLiftsAreEffective) {
  Rng rng(53);
  for (int n = 2; n <= 4; ++n) {
    const MinorBasis& b = minor_basis(n);
    for (int trial = 0; trial < 5; ++trial) {
      RatVector coords = zero_vector(b.size());
      for (Index k = 0; k < b.size(); ++k) coords(k) = random_integer(rng, 3);
      if (is_zero(coords)) continue;
      const MAEquation e = MAEquation::from_coords(n, coords);
      const ExteriorForm w = effective_lift(e);
      EXPECT_TRUE(wedge(w, ExteriorForm::symplectic(n)).is_zero());
      EXPECT_EQ(pullback_to_equation(w).coords(), coords);
    }
  }
}

TEST(BOmega, LambdaTable) {
  const std::vector<bool> zero{true, true, true, false, false, false};
  const auto forms = six_forms();
  for (std::size_t i = 0; i < forms.size(); ++i)
    EXPECT_EQ(b_omega_lambda(eq4(forms[i].second)).lambda_zero, zero[i]) << forms[i].first;
  EXPECT_EQ(b_omega_lambda(eq4(forms[3].second)).lambda, make_rational(-1, 144));
  try {
    b_omega_lambda(MAEquation::from_polynomial(3, u(3, 1, 1)));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::PreconditionViolation);
  }
}

TEST(BOmegaProperty, SkewProportionalAndQuadraticInScale) {
  Rng rng(54);
  std::vector<MAEquation> eqs;
  for (const auto& [name, poly] : six_forms()) eqs.push_back(eq4(poly));
  for (int trial = 0; trial < 4; ++trial) {
    RatVector coords = zero_vector(42);
    for (Index k = 0; k < 42; ++k) coords(k) = random_integer(rng, 3);
    eqs.push_back(MAEquation::from_coords(4, coords));
  }
  eqs.push_back(MAEquation::from_polynomial(2, u(2, 1, 1) * u(2, 2, 2) - u(2, 1, 2) * u(2, 1, 2) - c(2, 1)));
  for (const auto& e : eqs) {
    const BOmega b = b_omega_lambda(e);
    EXPECT_EQ(b.b_matrix, RatMatrix(-b.b_matrix.transpose()));
    EXPECT_EQ(b.b_matrix, RatMatrix(b.lambda * omega_matrix(e.n())));
    const Rational s = make_rational(-3, 2);
    const BOmega scaled = b_omega_lambda(e.scaled(s));
    EXPECT_EQ(scaled.b_matrix, RatMatrix(s * s * b.b_matrix));
    EXPECT_EQ(scaled.lambda_zero, b.lambda_zero);
  }
}

}  // namespace
}  // namespace sma
