#include "sympma/linalg.hpp"

#include <cctype>

namespace sma {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::UnsupportedDimension: return "UnsupportedDimension";
    case ErrorCode::NotInSpan: return "NotInSpan";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::DegenerateChart: return "DegenerateChart";
    case ErrorCode::Unsupported: return "Unsupported";
    case ErrorCode::NoSamplePoint: return "NoSamplePoint";
    case ErrorCode::ZeroPullback: return "ZeroPullback";
    case ErrorCode::ZeroReduction: return "ZeroReduction";
    case ErrorCode::NotInEF: return "NotInEF";
    case ErrorCode::ProportionalityViolation: return "ProportionalityViolation";
    case ErrorCode::PreconditionViolation: return "PreconditionViolation";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

Rational parse_rational(std::string_view text) {
  auto digits = [](std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!digits(num) || !digits(den) || den[0] == '-' || den[0] == '+')
    throw Error(ErrorCode::SyntaxError, "malformed rational '" + std::string(text) + "'");
  const Integer d{std::string(den)};
  if (d == 0) throw Error(ErrorCode::SyntaxError, "zero denominator in '" + std::string(text) + "'");
  return Rational(Integer(std::string(num[0] == '+' ? num.substr(1) : num))) / Rational(d);
}

std::string format_rational(const Rational& r) { return r.str(); }

IntMatrix clear_denominators(const RatMatrix& m) {
  IntMatrix out(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i) {
    Integer scale = 1;
    for (Index j = 0; j < m.cols(); ++j)
      scale = boost::multiprecision::lcm(scale, Integer(denominator(m(i, j))));
    for (Index j = 0; j < m.cols(); ++j)
      out(i, j) = numerator(m(i, j)) * (scale / Integer(denominator(m(i, j))));
  }
  return out;
}

Echelon reduced_echelon(const RatMatrix& m) {
  IntMatrix work = clear_denominators(m);
  Echelon e;
  e.pivots = bareiss_echelon(work);
  const Index r = e.rank();
  e.reduced = RatMatrix(r, m.cols());
  for (Index i = 0; i < r; ++i) {
    const Rational lead(work(i, e.pivots[i]));
    for (Index j = 0; j < m.cols(); ++j) e.reduced(i, j) = Rational(work(i, j)) / lead;
  }
  // Back substitution, bottom pivot first.
  for (Index i = r - 1; i >= 0; --i) {
    const Index pc = e.pivots[i];
    for (Index k = 0; k < i; ++k) {
      const Rational f = e.reduced(k, pc);
      if (f.is_zero()) continue;
      for (Index j = pc; j < m.cols(); ++j) e.reduced(k, j) -= f * e.reduced(i, j);
    }
  }
  return e;
}

RankKernel rank_kernel(const RatMatrix& m) {
  const Echelon e = reduced_echelon(m);
  RankKernel out;
  out.rank = e.rank();
  std::vector<bool> is_pivot(m.cols(), false);
  for (Index p : e.pivots) is_pivot[p] = true;
  for (Index free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    RatVector v = zero_vector(m.cols());
    v(free) = 1;
    for (Index i = 0; i < e.rank(); ++i) v(e.pivots[i]) = -e.reduced(i, free);
    out.kernel.push_back(std::move(v));
  }
  return out;
}

Index rank(const RatMatrix& m) {
  IntMatrix work = clear_denominators(m);
  return static_cast<Index>(bareiss_echelon(work).size());
}

std::optional<LinearSolution> solve_linear(const RatMatrix& m, const RatVector& b) {
  if (b.size() != m.rows())
    throw Error(ErrorCode::PreconditionViolation, "solve_linear: rhs length mismatch");
  RatMatrix aug(m.rows(), m.cols() + 1);
  aug.leftCols(m.cols()) = m;
  aug.col(m.cols()) = b;
  const Echelon e = reduced_echelon(aug);
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  LinearSolution sol;
  sol.particular = zero_vector(m.cols());
  for (Index i = 0; i < e.rank(); ++i) sol.particular(e.pivots[i]) = e.reduced(i, m.cols());
  std::vector<bool> is_pivot(m.cols(), false);
  for (Index p : e.pivots) is_pivot[p] = true;
  for (Index free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    RatVector v = zero_vector(m.cols());
    v(free) = 1;
    for (Index i = 0; i < e.rank(); ++i) v(e.pivots[i]) = -e.reduced(i, free);
    sol.kernel.push_back(std::move(v));
  }
  return sol;
}

Rational determinant(const RatMatrix& m) {
  if (m.rows() != m.cols())
    throw Error(ErrorCode::PreconditionViolation, "determinant of a non-square matrix");
  const Index n = m.rows();
  if (n == 0) return Rational(1);
  // Bareiss on the row-scaled integer matrix; the last pivot is the
  // determinant of the scaled matrix, up to the sign of the row swaps.
  IntMatrix work(n, n);
  Rational scale_total = 1;
  const IntMatrix scaled = clear_denominators(m);
  for (Index i = 0; i < n; ++i) {
    // recover the per-row scale from any nonzero entry
    for (Index j = 0; j < n; ++j) {
      if (!m(i, j).is_zero()) {
        scale_total *= Rational(scaled(i, j)) / m(i, j);
        break;
      }
    }
  }
  work = scaled;
  int sign = 1;
  Integer previous = 1;
  for (Index k = 0; k < n; ++k) {
    Index pivot = k;
    while (pivot < n && work(pivot, k) == 0) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != k) {
      work.row(pivot).swap(work.row(k));
      sign = -sign;
    }
    for (Index i = k + 1; i < n; ++i) {
      for (Index j = k + 1; j < n; ++j)
        work(i, j) = (work(k, k) * work(i, j) - work(i, k) * work(k, j)) / previous;
      work(i, k) = 0;
    }
    previous = work(k, k);
  }
  return Rational(sign) * Rational(work(n - 1, n - 1)) / scale_total;
}

RatMatrix row_space(const RatMatrix& m) { return reduced_echelon(m).reduced; }

RatMatrix columns_to_matrix(const std::vector<RatVector>& cols, Index rows) {
  RatMatrix out(rows, static_cast<Index>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j) out.col(static_cast<Index>(j)) = cols[j];
  return out;
}

}  // namespace sma
