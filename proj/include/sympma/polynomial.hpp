#pragma once

// Sparse multivariate polynomials with exact rational coefficients.
//
// Monomial order (frozen): graded lexicographic. Total degree decides first;
// ties are broken lexicographically with the earliest variable of the
// variable list most significant. Hessian rings list u11, u12, ..., u1n,
// u22, ..., unn first and auxiliary symbols after them, so u11 dominates.
// Every canonical form in this library (minor bases, Legendre
// normalization, printing order) depends on this order.

#include "sympma/rational.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sma {

using Exponent = std::uint16_t;
using Monomial = std::vector<Exponent>;
using Vars = std::shared_ptr<const std::vector<std::string>>;

Vars make_vars(std::vector<std::string> names);
bool same_vars(const Vars& a, const Vars& b);
/// Position of `name` in `vars`, or -1.
int find_var(const Vars& vars, std::string_view name);

int monomial_degree(const Monomial& m);

struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

class Polynomial {
 public:
  using Terms = std::map<Monomial, Rational, GrlexGreater>;

  /// The zero polynomial without a ring; adopts the ring of whatever it is
  /// combined with.
  Polynomial() = default;
  explicit Polynomial(Vars vars) : vars_(std::move(vars)) {}

  static Polynomial constant(const Vars& vars, const Rational& c);
  static Polynomial variable(const Vars& vars, std::size_t index);
  static Polynomial variable(const Vars& vars, std::string_view name);
  static Polynomial monomial(const Vars& vars, Monomial m, const Rational& c);

  const Vars& vars() const { return vars_; }
  std::size_t num_vars() const { return vars_ ? vars_->size() : 0; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  Rational coefficient(const Monomial& m) const;
  /// -1 for the zero polynomial.
  int total_degree() const;
  int degree_in(std::size_t var) const;
  bool is_homogeneous(int degree) const;
  Polynomial homogeneous_part(int degree) const;
  /// Set of variable indices that occur.
  std::vector<std::size_t> support() const;

  const Monomial& leading_monomial() const;
  const Rational& leading_coefficient() const;

  Polynomial derivative(std::size_t var) const;
  /// Coefficient of var^k, as a polynomial in the remaining variables.
  Polynomial coefficient_of_power(std::size_t var, int k) const;

  /// Ring homomorphism: variable i maps to images[i]; all images share a ring.
  Polynomial substitute(std::span<const Polynomial> images) const;
  /// Replaces the variables with set values by constants, leaves the rest.
  Polynomial partial_evaluate(std::span<const std::optional<Rational>> values) const;
  Rational evaluate(std::span<const Rational> point) const;
  /// Re-expresses the polynomial over another ring, matching variables by
  /// name. Throws if a used variable is missing from `target`.
  Polynomial rebase(const Vars& target) const;

  /// Exact quotient if `divisor` divides this polynomial, else nullopt.
  std::optional<Polynomial> divide_exact(const Polynomial& divisor) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& s);
  Polynomial operator-() const;
  Polynomial pow(unsigned k) const;

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  /// Adds c * m in place.
  void add_term(const Monomial& m, const Rational& c);

  std::string to_string() const;

 private:
  void adopt(const Vars& other);

  Vars vars_;
  Terms terms_;
};

std::string format_monomial(const Vars& vars, const Monomial& m);

}  // namespace sma
