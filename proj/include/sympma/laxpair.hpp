#pragma once

// Vector fields with coefficients in the jet ring of second and third
// derivatives, and verification of Lax pairs on the solution variety.
//
// Jet ring of dimension n (1 <= n <= 6): u_ij (i <= j) in chart order, then
// u_ijk (i <= j <= k), then the spectral parameter "lam". The total
// derivative D_j sends u_kl to u_klj and lam to 0.

#include "sympma/grassmann.hpp"
#include "sympma/sampling.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sma {

inline constexpr int kMaxJetDimension = 6;

/// Cached jet ring of dimension n.
const Vars& jet_vars(int n);
/// Jet ring followed by the basis markers d1..dn (Lax field input).
const Vars& lax_input_vars(int n);
std::string jet_name(std::vector<int> indices);  ///< 0-based, any order
Polynomial jet_var(int n, std::vector<int> indices);
Polynomial spectral_parameter(int n);

/// D_j on a polynomial in u_ij and lam. Error(Unsupported) if a third
/// derivative occurs (fourth derivatives are not in the ring).
Polynomial total_derivative(int n, const Polynomial& p, int j);

struct LaxField {
  int n = 0;
  std::vector<Polynomial> components;  ///< coefficient of d_1 .. d_n

  static LaxField zero(int n);
  /// From a polynomial over lax_input_vars(n) that is linear in d1..dn.
  /// Throws Error(SyntaxError) otherwise.
  static LaxField from_linear_form(int n, const Polynomial& form);
  std::string to_string() const;
  friend bool operator==(const LaxField&, const LaxField&) = default;
};

/// [X, Y]_i = sum_j (X_j D_j Y_i - Y_j D_j X_i).
LaxField commutator(const LaxField& x, const LaxField& y);

/// Rational values for every u_ij and u_ijk (lam unset) with F = 0 and
/// D_k F = 0 for all k. `equation` is a polynomial in the u_ij of the jet
/// ring. Throws Error(NoSamplePoint).
std::vector<std::optional<Rational>> sample_on_variety(const Polynomial& equation, Rng& rng,
                                                       long range = 20, int budget = 100);

/// Equation of an MAEquation moved to the jet ring.
Polynomial jet_equation(const MAEquation& eq);

enum class LaxMode { Strict, ModSpan };
const char* to_string(LaxMode m);

struct LaxWitness {
  int trial = 0;
  std::vector<std::optional<Rational>> point;
  std::string where;     ///< component or minor that fails
  std::string residual;  ///< its value, a polynomial in lam
};

struct LaxVerdict {
  bool holds = false;
  int trials_run = 0;
  std::optional<LaxWitness> witness;
};

struct LaxOptions {
  int trials = 20;
  std::uint64_t seed = 20090101;
  long range = 20;
};

/// Strict: [X1, X2] vanishes identically in lam at every sampled point.
/// ModSpan: every 3x3 minor of (X1; X2; [X1, X2]) does.
LaxVerdict verify_lax(const LaxField& x1, const LaxField& x2, const Polynomial& equation, LaxMode mode,
                      const LaxOptions& options = {});

/// Dimensional reduction of a pair: d_a -> sum_b M_ab d_b on fields, and on
/// the coefficients u_ab -> sum M_ac M_bd w_cd + 2 Q_ab,
/// u_abc -> sum M_ad M_be M_cf w_def.  M is n x m, Q symmetric n x n.
struct JetReduction {
  RatMatrix M;
  RatMatrix Q;
};

Polynomial reduce_jet_polynomial(const Polynomial& p, const JetReduction& r);
LaxField reduce_field(const LaxField& x, const JetReduction& r);
std::pair<LaxField, LaxField> reduce_6d_lax(const LaxField& x1, const LaxField& x2, const JetReduction& r);

/// u15 + u26 + u13 u24 - u14 u23 and its pair
///     X1 = d6 + u13 d4 - u14 d3 + lam d1,  X2 = d5 - u23 d4 + u24 d3 - lam d2.
Polynomial six_dim_equation();
std::pair<LaxField, LaxField> six_dim_pair();

}  // namespace sma
