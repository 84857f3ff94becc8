#pragma once

// Hyperplane sections of the Plucker-embedded Lagrangian Grassmannian.
//
// The affine chart of the Grassmannian is the space of symmetric n x n
// matrices U; the chart variables are u11, u12, ..., u1n, u22, ..., unn.
// A symplectic Monge-Ampere equation is a constant-coefficient combination
// of all minors of U, i.e. an element of the minor span.
//
// Basis order (frozen, used by the coordinate file format): elements are
// grouped by degree 0, 1, ..., n. Inside a degree the minors are row reduced
// over the monomials of that degree, columns sorted by the grlex order of
// polynomial.hpp; basis element k is row k of that reduced echelon form, so
// its leading monomial is its pivot and no other element of the same degree
// contains that monomial. Degree 1 is u11, u12, ..., unn; the top degree is
// det U.

#include "sympma/polynomial.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sma {

inline constexpr int kMinDimension = 2;
inline constexpr int kMaxDimension = 4;

void require_supported_dimension(int n);

/// Number of chart variables n(n+1)/2.
inline int chart_size(int n) { return n * (n + 1) / 2; }
/// Chart variable index of u_ij, 0-based i, j in either order.
int chart_index(int n, int i, int j);
/// u11, u12, ..., unn (cached per n).
const Vars& hessian_vars(int n);
std::string chart_name(int i, int j);

using PolyMatrix = std::vector<std::vector<Polynomial>>;

/// Symbolic symmetric Hessian over hessian_vars(n).
PolyMatrix symbolic_hessian(int n);
Polynomial poly_determinant(const PolyMatrix& m);
/// Determinant of the submatrix with the given rows and columns.
Polynomial poly_minor(const PolyMatrix& m, const std::vector<int>& rows,
                      const std::vector<int>& cols);

/// C(2n, n) - C(2n, n + 2).
long closed_form_dimension(int n);

struct MinorBasis {
  int n = 0;
  std::vector<Polynomial> polys;
  std::vector<int> degree;           ///< degree of each element
  std::vector<Monomial> pivot;       ///< leading monomial of each element
  std::vector<int> degree_dims;      ///< dim M_0, ..., dim M_n
  std::vector<int> degree_offset;    ///< first index of each degree

  Index size() const { return static_cast<Index>(polys.size()); }
};

/// Cached; 2 <= n <= 4, else Error(UnsupportedDimension).
const MinorBasis& minor_basis(int n);

/// Coordinates of `poly` in the basis, or nullopt if it is not a minor
/// combination. `poly` may live in any ring whose used variables are chart
/// variables of dimension n.
std::optional<RatVector> decompose(const Polynomial& poly, const MinorBasis& basis);
Polynomial compose(const RatVector& coords, const MinorBasis& basis);

class MAEquation {
 public:
  /// Throws Error(NotInSpan) or Error(ZeroPolynomial).
  static MAEquation from_polynomial(int n, const Polynomial& poly);
  static MAEquation from_coords(int n, const RatVector& coords);

  int n() const { return n_; }
  const Polynomial& poly() const { return poly_; }
  const RatVector& coords() const { return coords_; }

  MAEquation scaled(const Rational& s) const;
  /// Rescaled so that the leading coefficient (grlex) is 1.
  MAEquation normalized() const;
  /// True when the two equations define the same hyperplane.
  bool proportional_to(const MAEquation& other) const;

  friend bool operator==(const MAEquation& a, const MAEquation& b) {
    return a.n_ == b.n_ && a.poly_ == b.poly_;
  }

 private:
  MAEquation(int n, Polynomial poly, RatVector coords)
      : n_(n), poly_(std::move(poly)), coords_(std::move(coords)) {}
  int n_;
  Polynomial poly_;
  RatVector coords_;
};

/// A point of the Grassmannian: `chart` lists the Legendre-flipped indices
/// (0-based); the empty chart is the affine chart of symmetric matrices.
struct LagrangePoint {
  int n = 0;
  std::vector<int> chart;
  RatMatrix matrix;

  static LagrangePoint affine(const RatMatrix& u);
};

bool is_symmetric(const RatMatrix& m);
/// Chart-variable values of a symmetric matrix, in hessian_vars order.
std::vector<Rational> chart_point(const RatMatrix& u);
RatMatrix matrix_from_chart(int n, const RatVector& chart_values);

/// Values of the basis polynomials at the point (affine chart only).
RatVector plucker_eval(const LagrangePoint& point, const MinorBasis& basis);

/// Equation F(U + u0), re-decomposed.
MAEquation translate(const MAEquation& eq, const RatMatrix& u0);

/// Partial Legendre transform in the index pairs of S (0-based):
///     x_S -> u_S,  u_S -> x_S,  u_T -> -u_T.
/// On the chart, with A = U_SS, B = U_ST, C = U_TT,
///     U -> [ A^-1 , -A^-1 B ; -B^T A^-1 , -(C - B^T A^-1 B) ],
/// which is an involution. The transformed equation is det(A) F(U~),
/// a polynomial in the minor span, rescaled to leading coefficient 1.
MAEquation partial_legendre(const MAEquation& eq, const std::vector<int>& S);

/// The N x N matrix of coords -> det(A) F(U~) (unnormalized); cached.
const RatMatrix& legendre_matrix(int n, const std::vector<int>& S);

struct SingularLocus {
  int dim = 0;
  RatMatrix form;                    ///< Hessian of the quadratic form
  std::vector<RatMatrix> kernel;     ///< symmetric-matrix directions
};

/// Chart singular locus of a purely quadratic equation: the kernel of its
/// quadratic form. Error(Unsupported) unless the equation is homogeneous
/// of degree 2.
SingularLocus singular_locus_quadratic(const MAEquation& eq);

struct MeetsAllOptions {
  int samples = 16;
  long range = 1000;
  std::uint64_t seed = 20090101;
  bool symbolic_fallback = true;
};

struct MeetsAllResult {
  bool meets = false;
  Index best_sampled_rank = 0;
  bool decided_symbolically = false;
};

/// Whether the planes U(t), U(t) = sum t_k B_k, sweep out all of V: the
/// map (t, x) -> (x, U(t) x) has generic Jacobian rank 2n. Randomized exact
/// rank at sample points, then a symbolic determinant check when no sample
/// reaches full rank.
MeetsAllResult meets_all_sublagrangians(int n, const std::vector<RatMatrix>& kernel,
                                        const MeetsAllOptions& options = {});

/// Whether the hyperplane contains the osculating space O_{n-2} at the
/// point: every coordinate of F(U + U0) of degree <= n - 2 vanishes.
bool osculating_containment(const MAEquation& eq, const LagrangePoint& point);

/// Versioned coordinate file: {"format", "version", "n", "coords": ["p/q", ...]}.
std::string serialize_equation(const MAEquation& eq);
MAEquation deserialize_equation(const std::string& text);

}  // namespace sma
