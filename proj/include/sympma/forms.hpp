#pragma once

// Constant-coefficient exterior forms on the symplectic space with
// generators dx1..dxn, du1..dun (indices 0..n-1 and n..2n-1), symplectic
// form Omega = sum dx^i ^ du_i, and the correspondence between effective
// n-forms and equations.

#include "sympma/grassmann.hpp"

#include <cstdint>
#include <map>
#include <string>

namespace sma {

class ExteriorForm {
 public:
  using Mask = std::uint32_t;  ///< bit k set = generator k present
  using Terms = std::map<Mask, Rational>;

  explicit ExteriorForm(int n) : n_(n) {}
  static ExteriorForm generator(int n, int k);
  static ExteriorForm dx(int n, int i) { return generator(n, i); }
  static ExteriorForm du(int n, int i) { return generator(n, n + i); }
  static ExteriorForm scalar(int n, const Rational& c);
  /// Omega = sum_i dx^i ^ du_i.
  static ExteriorForm symplectic(int n);

  int n() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Degree of a homogeneous form; -1 when zero or mixed.
  int degree() const;
  Rational coefficient(Mask m) const;
  void add_term(Mask m, const Rational& c);

  /// Interior product with the basis vector dual to generator k.
  ExteriorForm interior(int k) const;

  ExteriorForm& operator+=(const ExteriorForm& o);
  ExteriorForm& operator-=(const ExteriorForm& o);
  ExteriorForm& operator*=(const Rational& s);
  friend ExteriorForm operator+(ExteriorForm a, const ExteriorForm& b) { return a += b; }
  friend ExteriorForm operator-(ExteriorForm a, const ExteriorForm& b) { return a -= b; }
  friend ExteriorForm operator*(ExteriorForm a, const Rational& s) { return a *= s; }
  friend ExteriorForm operator*(const Rational& s, ExteriorForm a) { return a *= s; }
  friend ExteriorForm wedge(const ExteriorForm& a, const ExteriorForm& b);
  friend bool operator==(const ExteriorForm& a, const ExteriorForm& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

  /// "dx1^du2 - 2 du1^du2"; "0" for the zero form.
  std::string to_string() const;

 private:
  int n_;
  Terms terms_;
};

/// Sign of moving the generators of b past those of a (disjoint masks).
int wedge_sign(ExteriorForm::Mask a, ExteriorForm::Mask b);

/// Coefficient of dx1 ^ ... ^ dxn after du_i -> sum_j u_ij dx^j.
Polynomial pullback_polynomial(const ExteriorForm& w);
/// Throws Error(PreconditionViolation) unless deg w = n, Error(ZeroPullback)
/// when the pullback vanishes.
MAEquation pullback_to_equation(const ExteriorForm& w);

bool is_effective(const ExteriorForm& w);
/// Basis of the effective n-forms (kernel of w -> w ^ Omega); cached.
const std::vector<ExteriorForm>& effective_basis(int n);
/// The unique effective n-form pulling back to eq.poly().
ExteriorForm effective_lift(const MAEquation& eq);

struct BOmega {
  RatMatrix b_matrix;  ///< B(e_a, e_b) over the 2n generators
  Rational lambda;     ///< B = lambda * Omega; depends on the scale of eq
  bool lambda_zero = false;
};

/// B(X, Y) = (i_X w ^ i_Y w ^ Omega) / Omega^n on the effective lift.
RatMatrix b_omega_matrix(const MAEquation& eq);
/// Even n only (Error(PreconditionViolation) otherwise). Throws
/// Error(ProportionalityViolation) if B is not skew or not a multiple of
/// Omega.
BOmega b_omega_lambda(const MAEquation& eq);

}  // namespace sma
