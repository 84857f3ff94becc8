#pragma once

// Exact scalar types and the dense Eigen aliases built on them.

#include <Eigen/Dense>
#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sma {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RatMatrix = Matrix<Rational>;
using RatVector = Vector<Rational>;
using IntMatrix = Matrix<Integer>;
using Index = Eigen::Index;

/// Stable error codes; the CLI maps them onto exit statuses.
enum class ErrorCode {
  UnsupportedDimension,
  NotInSpan,
  ZeroPolynomial,
  DegenerateChart,
  Unsupported,
  NoSamplePoint,
  ZeroPullback,
  ZeroReduction,
  NotInEF,
  ProportionalityViolation,
  PreconditionViolation,
  SyntaxError,
  IoError,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

/// "p/q" or "p"; throws Error(SyntaxError) otherwise.
Rational parse_rational(std::string_view text);
std::string format_rational(const Rational& r);

inline Rational make_rational(long num, long den = 1) {
  return Rational(num) / Rational(den);
}

inline bool is_zero(const Rational& r) { return r.is_zero(); }

inline RatMatrix zero_matrix(Index rows, Index cols) {
  RatMatrix m(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) m(i, j) = 0;
  return m;
}

inline RatVector zero_vector(Index size) {
  RatVector v(size);
  for (Index i = 0; i < size; ++i) v(i) = 0;
  return v;
}

inline RatMatrix identity_matrix(Index n) {
  RatMatrix m = zero_matrix(n, n);
  for (Index i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

inline bool is_zero(const RatVector& v) {
  for (Index i = 0; i < v.size(); ++i)
    if (!v(i).is_zero()) return false;
  return true;
}

inline bool is_zero(const RatMatrix& m) {
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) return false;
  return true;
}

}  // namespace sma
