#pragma once

// Exact linear algebra over Q.
//
// Elimination is fraction-free: rows are scaled to integers and reduced with
// Bareiss' algorithm, where every intermediate entry is a minor of the input
// and each division is exact. Only the final back substitution to reduced
// row echelon form goes through rationals.

#include "sympma/rational.hpp"

#include <optional>
#include <vector>

namespace sma {

/// In-place Bareiss elimination to row echelon form over an integral domain.
/// Returns the pivot columns; the rank is their count. Rows below the rank
/// are zero on exit.
template <typename Ring>
std::vector<Index> bareiss_echelon(Matrix<Ring>& m) {
  std::vector<Index> pivots;
  Ring previous(1);
  Index row = 0;
  for (Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Index pivot = row;
    while (pivot < m.rows() && m(pivot, col) == Ring(0)) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row) m.row(pivot).swap(m.row(row));
    const Ring p = m(row, col);
    for (Index i = row + 1; i < m.rows(); ++i) {
      const Ring factor = m(i, col);
      for (Index j = col + 1; j < m.cols(); ++j)
        m(i, j) = (p * m(i, j) - factor * m(row, j)) / previous;
      m(i, col) = Ring(0);
    }
    previous = p;
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

/// Row echelon data of a rational matrix.
struct Echelon {
  RatMatrix reduced;           ///< reduced row echelon form, rank rows
  std::vector<Index> pivots;   ///< pivot column of each row
  Index rank() const { return static_cast<Index>(pivots.size()); }
};

/// Scales each row by the lcm of its denominators.
IntMatrix clear_denominators(const RatMatrix& m);

Echelon reduced_echelon(const RatMatrix& m);

struct RankKernel {
  Index rank = 0;
  std::vector<RatVector> kernel;  ///< one vector per free column, in RREF shape
};

RankKernel rank_kernel(const RatMatrix& m);
Index rank(const RatMatrix& m);

struct LinearSolution {
  RatVector particular;
  std::vector<RatVector> kernel;
};

/// Solves m x = b; nullopt when inconsistent.
std::optional<LinearSolution> solve_linear(const RatMatrix& m, const RatVector& b);

/// Exact determinant of a square matrix.
Rational determinant(const RatMatrix& m);

/// Basis of the row space, as rows of the reduced echelon form.
RatMatrix row_space(const RatMatrix& m);

/// Stacks column vectors into a matrix with `rows` rows.
RatMatrix columns_to_matrix(const std::vector<RatVector>& cols, Index rows);

}  // namespace sma
