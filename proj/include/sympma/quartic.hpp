#pragma once

// Binary quartics p(t) = a4 t^4 + a3 t^3 + a2 t^2 + a1 t + a0 as the
// standard five-dimensional SL(2) module
//     [a b; c d] . p(t) = (ct + d)^4 p((at + b)/(ct + d)).
// A quartic of formal degree 4 and actual degree d has a root at infinity of
// multiplicity 4 - d.
//
// Invariants use binomial weights, p = A t^4 + 4B t^3 + 6C t^2 + 4D t + E:
//     I = AE - 4BD + 3C^2
//     J = ACE + 2BCD - AD^2 - B^2 E - C^3
//     discriminant = I^3 - 27 J^2
// Four distinct roots with harmonic cross-ratio (-1) are exactly J = 0 with a
// nonzero discriminant.

#include "sympma/rational.hpp"

#include <array>
#include <string>
#include <vector>

namespace sma {

/// Dense univariate polynomial, coefficients from degree 0 upward, trimmed.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational operator[](int i) const;
  const Rational& leading() const { return c_.back(); }

  UniPoly derivative() const;
  UniPoly monic() const;
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

  /// Quotient and remainder; divisor nonzero.
  static std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
  static UniPoly gcd(UniPoly a, UniPoly b);

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Square-free decomposition (Yun): factors[i] has only simple roots, each a
/// root of multiplicity i + 1.
std::vector<UniPoly> squarefree_decomposition(const UniPoly& p);

struct BinaryQuartic {
  std::array<Rational, 5> a{};  ///< a[i] multiplies t^i

  static BinaryQuartic from_coeffs(std::array<long, 5> low_to_high);
  bool is_zero() const;
  UniPoly as_poly() const;
  std::string to_string() const;
  friend bool operator==(const BinaryQuartic&, const BinaryQuartic&) = default;
};

/// Root multiplicities over C, including the root at infinity, in
/// descending order; sums to 4. Throws Error(ZeroPolynomial) for q = 0.
std::vector<int> multiplicity_pattern(const BinaryQuartic& q);

struct QuarticInvariants {
  Rational I;
  Rational J;
  Rational discriminant;
  bool harmonic() const { return J.is_zero() && !discriminant.is_zero(); }
};

QuarticInvariants quartic_invariants(const BinaryQuartic& q);

/// (ct + d)^4 q((at + b)/(ct + d)).
BinaryQuartic sl2_act(const BinaryQuartic& q, const Rational& a, const Rational& b,
                      const Rational& c, const Rational& d);

}  // namespace sma
