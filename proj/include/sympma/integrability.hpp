#pragma once

// Integrability of four-dimensional equations: travelling-wave reductions to
// three dimensions, the 3D linearisability test, the 4D verdict, the
// quartic-pair classification of quadratic equations tangent at three
// points, and identification by symmetry fingerprints.

#include "sympma/grassmann.hpp"
#include "sympma/quartic.hpp"
#include "sympma/sampling.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sma {

/// u = w(x^a + k_a x^t) + Q(x, x), where `order` lists the three w
/// directions followed by the travelling direction t (0-based indices).
struct ReductionSample {
  std::array<Rational, 3> k{};
  RatMatrix Q = zero_matrix(4, 4);
  std::array<int, 4> order{0, 1, 2, 3};

  std::string to_string() const;
};

/// u_ab -> w_ab + 2Q_ab, u_at -> sum_b k_b w_ab + 2Q_at,
/// u_tt -> sum k_a k_b w_ab + 2Q_tt.  Throws Error(ZeroReduction).
MAEquation travelling_wave_reduce(const MAEquation& eq, const ReductionSample& s);

/// Random integer k and symmetric Q in [-range, range] and a random order.
ReductionSample random_reduction(Rng& rng, long range);

enum class Linearisability { Linearisable, NotLinearisable, Degenerate };
const char* to_string(Linearisability l);

/// Non-degenerate 3D equations are linearisable exactly when their
/// symmetry algebra has dimension 9. Error(NoSamplePoint) propagates.
Linearisability linearisable_3d(const MAEquation& eq);

enum class Verdict { Integrable, NotIntegrable, Linearisable, Degenerate };
const char* to_string(Verdict v);

enum class SampleOutcome { Linearisable, NotLinearisable, Degenerate, ZeroReduction, NoSamplePoint };
const char* to_string(SampleOutcome o);

struct SampleRecord {
  ReductionSample sample;
  SampleOutcome outcome = SampleOutcome::Degenerate;
  int symmetry_dim = -1;  ///< -1 when not computed
  std::string reduced;    ///< reduced equation, empty for a zero reduction
};

struct QuadraticEvidence {
  std::vector<int> chart;  ///< Legendre subset giving the quadratic form
  int singular_dim = 0;
  bool meets_all = false;
};

struct IntegrabilityOptions {
  int trials = 50;
  long range = 10;
  std::uint64_t seed = 20090101;
  bool stop_at_failure = true;
};

struct IntegrabilityReport {
  Verdict verdict = Verdict::Degenerate;
  int samples_run = 0;
  int nondegenerate_samples = 0;
  std::vector<SampleRecord> samples;
  std::optional<SampleRecord> failing_sample;
  int symmetry_dim = 0;
  /// Every Legendre chart in which the equation is purely quadratic.
  std::vector<QuadraticEvidence> quadratic;
  /// Some quadratic chart has a 4-dimensional singular locus meeting all
  /// sub-Lagrangian planes; nullopt when no chart is quadratic.
  std::optional<bool> quadratic_criterion;
  /// Legendre subsets whose chart origin has O_2 in the hyperplane.
  std::vector<std::vector<int>> osculating_charts;
};

IntegrabilityReport integrable_4d(const MAEquation& eq, const IntegrabilityOptions& options = {});

/// The ten quadratic equations tangent to the Grassmannian at infinity, at
/// the origin and at u14 = 1, u23 = -1: E_0..E_4 then F_0..F_4.
const std::vector<Polynomial>& ef_basis();

struct QuarticPair {
  BinaryQuartic p;
  BinaryQuartic q;
};

/// v = v_e - v_f with E_i <-> t^i (p) and F_i <-> t^i (q). Throws
/// Error(NotInEF).
QuarticPair ef_coordinates(const MAEquation& eq);
/// sum p_i E_i - sum q_i F_i.
MAEquation equation_from_pair(const QuarticPair& pair);

struct CaseLabel {
  int number = 0;  ///< 1..10; 0 when unrecognized
  std::string equation;
  bool recognized = false;
  std::vector<int> pattern_p;
  std::vector<int> pattern_q;
  QuarticInvariants invariants_p;
  QuarticInvariants invariants_q;
  std::optional<int> singular_dim;  ///< computed for case 1 and unrecognized pairs
};

CaseLabel classify_quartic_pair(const QuarticPair& pair);

struct Fingerprint {
  int symmetry_dim = 0;
  bool lambda_zero = false;
  std::optional<bool> reductive;  ///< only computed at dimension 12
  bool nondegenerate = false;
};

Fingerprint fingerprint(const MAEquation& eq);
/// Name from the fingerprint table, or nullopt.
std::optional<std::string> match_fingerprint(const Fingerprint& f);
/// Name of the normal form, or "Unknown".
std::string identify_equation(const MAEquation& eq);

}  // namespace sma
