#pragma once

// The sp(2n) action on the minor span and symmetry algebras of equations.
//
// Generators act on the chart as weighted vector fields, i.e. on the affine
// cone over the Plucker embedding:
//     X_ij : dU = E_ij + E_ji (once on the diagonal),  weight 0
//     L_ij : dU = E_ij U + U E_ji,                     weight -delta_ij
//     P_ij : dU = U (E_ij + E_ji) U,                  weight -2 u_ij
// and a generator sends F to  sum_k dU_k dF/du_k + weight * F.  The vector
// field parts are the operators X_ij = d/du_ij, L_ij = sum_s u_js d/du_is +
// u_ij d/du_ii, P_ij = 2 sum_s u_is u_js d/du_ss + sum_{s != k} u_is u_jk
// d/du_sk with d/du_is for i > s read as d/du_si.
//
// Generator order: X_ij (i <= j, chart order), L_ij (row major), P_ij
// (i <= j, chart order). Labels are 1-based: "X11", "L43", "P12".

#include "sympma/grassmann.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sma {

enum class GeneratorKind { X, L, P };

struct SpGenerator {
  GeneratorKind kind = GeneratorKind::X;
  int i = 0;  ///< 0-based
  int j = 0;
  std::string label() const;
};

/// n(2n + 1) generators in the fixed order; cached.
const std::vector<SpGenerator>& sp_generators(int n);
inline int sp_dimension(int n) { return n * (2 * n + 1); }
/// Index of the generator with this label, or -1.
int generator_index(int n, std::string_view label);

/// A weighted vector field on the chart of dimension n.
struct VectorField {
  std::vector<Polynomial> components;  ///< one per chart variable
  Polynomial weight;
};

VectorField generator_field(int n, const SpGenerator& g);
/// Field of the element with coordinates v over sp_generators(n).
VectorField element_field(int n, const RatVector& v);
Polynomial apply_field(const VectorField& field, const Polynomial& p);
Polynomial apply_generator(int n, const SpGenerator& g, const Polynomial& p);
/// Operator commutator [A, B] = AB - BA of two weighted fields.
VectorField commutator(const VectorField& a, const VectorField& b);

/// Coordinates of a weighted field over the generator fields; nullopt when
/// it is not in their span.
std::optional<RatVector> decompose_field(int n, const VectorField& field);
/// Lie bracket on coordinates, matching the operator commutator.
RatVector sp_bracket(int n, const RatVector& v, const RatVector& w);

/// N x N matrix of generator g on the minor basis (column k = coordinates
/// of g applied to basis element k). Cached per n.
const RatMatrix& generator_action_matrix(int n, std::size_t g);
/// Sum of v_g times the generator action matrices.
RatMatrix action_matrix(int n, const RatVector& v);

struct LieSubalgebra {
  int n = 0;
  int ambient_dim = 0;
  /// Coefficient vectors over sp_generators(n), in reduced echelon form.
  std::vector<RatVector> basis;
  /// structure[i][j] = coordinates of [b_i, b_j] in `basis`.
  std::vector<std::vector<RatVector>> structure;

  int dim() const { return static_cast<int>(basis.size()); }

  /// Span of the given elements with structure constants. Throws
  /// Error(PreconditionViolation) when the span is not bracket-closed.
  static LieSubalgebra span_of(int n, const std::vector<RatVector>& elements);
  /// Abstract algebra from its structure constants (n = 0).
  static LieSubalgebra from_structure(std::vector<std::vector<RatVector>> structure);

  /// Coordinates of an sp element in `basis`, or nullopt.
  std::optional<RatVector> coordinates(const RatVector& v) const;
  bool contains(const RatVector& v) const { return coordinates(v).has_value(); }
};

/// {v : v(F) = mu F for some mu}, i.e. A_v c = mu c.
LieSubalgebra symmetry_algebra(const MAEquation& eq);
/// Whether v(F) is a scalar multiple of F.
bool stabilizes(const MAEquation& eq, const RatVector& v);

struct AlgebraSummary {
  int dim = 0;
  int center_dim = 0;
  int derived_dim = 0;
  int radical_dim = 0;
  bool reductive = false;
};

RatMatrix killing_form(const LieSubalgebra& g);
/// Radical as the Killing-orthogonal complement of [g, g]; basis vectors in
/// the coordinates of g.basis.
std::vector<RatVector> solvable_radical(const LieSubalgebra& g);
std::vector<RatVector> center(const LieSubalgebra& g);
AlgebraSummary analyze(const LieSubalgebra& g);
/// Radical equals center.
bool is_reductive(const LieSubalgebra& g);

/// Symbol Q_aa = dF/du_aa, Q_ab = dF/du_ab / 2 at a chart point.
RatMatrix symbol_matrix(const MAEquation& eq, const std::vector<Rational>& point);

struct NondegeneracyOptions {
  int samples = 8;
  long range = 50;
  int budget = 100;
  std::uint64_t seed = 20090101;
};

/// Symbol of rank >= 3 at some sampled zero of F. Throws
/// Error(NoSamplePoint) when no zero is found.
bool nondegenerate(const MAEquation& eq, const NondegeneracyOptions& options = {});

/// "X11 + X22", "2L11 + L22 - 1/2P12"; "0" for the zero element.
std::string format_sp_element(int n, const RatVector& v);
/// Inverse of format_sp_element; also accepts '*' after a coefficient.
RatVector parse_sp_element(int n, std::string_view text);

}  // namespace sma
