#include "sympma/forms.hpp"

#include "sympma/linalg.hpp"

#include <array>
#include <bit>
#include <mutex>
#include <sstream>

namespace sma {

namespace {

using Mask = ExteriorForm::Mask;

struct EffectiveData {
  std::vector<ExteriorForm> basis;
  RatMatrix lift;  // minor coordinates -> coefficients over `basis`
};

std::vector<Mask> masks_of_degree(int generators, int degree) {
  std::vector<Mask> out;
  for (Mask m = 0; m < (Mask{1} << generators); ++m)
    if (std::popcount(m) == degree) out.push_back(m);
  return out;
}

EffectiveData build_effective(int n) {
  EffectiveData d;
  const ExteriorForm omega = ExteriorForm::symplectic(n);
  const auto sources = masks_of_degree(2 * n, n);
  const auto targets = masks_of_degree(2 * n, n + 2);
  std::map<Mask, Index> row;
  for (std::size_t r = 0; r < targets.size(); ++r) row[targets[r]] = static_cast<Index>(r);
  RatMatrix wedge_map = zero_matrix(static_cast<Index>(targets.size()), static_cast<Index>(sources.size()));
  for (std::size_t c = 0; c < sources.size(); ++c) {
    ExteriorForm w(n);
    w.add_term(sources[c], 1);
    const ExteriorForm image = wedge(w, omega);
    for (const auto& [m, v] : image.terms()) wedge_map(row.at(m), static_cast<Index>(c)) = v;
  }
  const MinorBasis& minors = minor_basis(n);
  std::vector<RatVector> pulled;
  for (const auto& k : rank_kernel(wedge_map).kernel) {
    ExteriorForm w(n);
    for (Index c = 0; c < k.size(); ++c)
      if (!k(c).is_zero()) w.add_term(sources[c], k(c));
    const auto coords = decompose(pullback_polynomial(w), minors);
    if (!coords) throw Error(ErrorCode::NotInSpan, "pullback of an effective form left the minor span");
    pulled.push_back(*coords);
    d.basis.push_back(std::move(w));
  }
  const Index N = minors.size();
  if (static_cast<Index>(d.basis.size()) != N)
    throw Error(ErrorCode::PreconditionViolation, "effective forms and minors differ in dimension");
  RatMatrix aug(N, 2 * N);
  aug.leftCols(N) = columns_to_matrix(pulled, N);
  aug.rightCols(N) = identity_matrix(N);
  const Echelon e = reduced_echelon(aug);
  if (e.rank() != N || e.pivots.back() != N - 1)
    throw Error(ErrorCode::PreconditionViolation, "pullback is not an isomorphism on effective forms");
  d.lift = e.reduced.rightCols(N);
  return d;
}

const EffectiveData& effective_data(int n) {
  require_supported_dimension(n);
  static std::array<std::once_flag, kMaxDimension + 1> flags;
  static std::array<EffectiveData, kMaxDimension + 1> cache;
  std::call_once(flags[n], [n] { cache[n] = build_effective(n); });
  return cache[n];
}

}  // namespace

int wedge_sign(Mask a, Mask b) {
  int swaps = 0;
  for (Mask rest = b; rest; rest &= rest - 1) {
    const int j = std::countr_zero(rest);
    swaps += std::popcount(a >> (j + 1));
  }
  return swaps % 2 ? -1 : 1;
}

ExteriorForm ExteriorForm::generator(int n, int k) {
  if (k < 0 || k >= 2 * n) throw Error(ErrorCode::PreconditionViolation, "form generator out of range");
  ExteriorForm w(n);
  w.add_term(Mask{1} << k, 1);
  return w;
}

ExteriorForm ExteriorForm::scalar(int n, const Rational& c) {
  ExteriorForm w(n);
  w.add_term(0, c);
  return w;
}

ExteriorForm ExteriorForm::symplectic(int n) {
  ExteriorForm w(n);
  for (int i = 0; i < n; ++i) w += wedge(dx(n, i), du(n, i));
  return w;
}

int ExteriorForm::degree() const {
  if (terms_.empty()) return -1;
  const int d = std::popcount(terms_.begin()->first);
  for (const auto& [m, c] : terms_)
    if (std::popcount(m) != d) return -1;
  return d;
}

Rational ExteriorForm::coefficient(Mask m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void ExteriorForm::add_term(Mask m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ExteriorForm ExteriorForm::interior(int k) const {
  ExteriorForm out(n_);
  const Mask bit = Mask{1} << k;
  for (const auto& [m, c] : terms_) {
    if (!(m & bit)) continue;
    const int before = std::popcount(m & (bit - 1));
    out.add_term(m & ~bit, before % 2 ? Rational(-c) : c);
  }
  return out;
}

ExteriorForm& ExteriorForm::operator+=(const ExteriorForm& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

ExteriorForm& ExteriorForm::operator-=(const ExteriorForm& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

ExteriorForm& ExteriorForm::operator*=(const Rational& s) {
  if (s.is_zero()) terms_.clear();
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

ExteriorForm wedge(const ExteriorForm& a, const ExteriorForm& b) {
  if (a.n_ != b.n_) throw Error(ErrorCode::PreconditionViolation, "wedge of forms on different spaces");
  ExteriorForm out(a.n_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      if (ma & mb) continue;
      out.add_term(ma | mb, Rational(wedge_sign(ma, mb)) * ca * cb);
    }
  return out;
}

std::string ExteriorForm::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool neg = c < 0;
    const Rational mag = neg ? Rational(-c) : c;
    os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
    first = false;
    if (m == 0) {
      os << mag.str();
      continue;
    }
    if (mag != 1) os << mag.str() << " ";
    bool first_factor = true;
    for (int k = 0; k < 2 * n_; ++k) {
      if (!(m & (Mask{1} << k))) continue;
      os << (first_factor ? "" : "^") << (k < n_ ? "dx" : "du") << (k % n_ + 1);
      first_factor = false;
    }
  }
  return first ? "0" : os.str();
}

Polynomial pullback_polynomial(const ExteriorForm& w) {
  const int n = w.n();
  const Vars& vars = hessian_vars(n);
  Polynomial total(vars);
  for (const auto& [mask, coeff] : w.terms()) {
    if (std::popcount(mask) != n) continue;
    // Forms in the dx only, with polynomial coefficients.
    std::map<Mask, Polynomial> acc{{0, Polynomial::constant(vars, coeff)}};
    for (int k = 0; k < 2 * n; ++k) {
      if (!(mask & (Mask{1} << k))) continue;
      std::map<Mask, Polynomial> next;
      for (const auto& [m, p] : acc) {
        for (int j = 0; j < n; ++j) {
          const Mask bit = Mask{1} << j;
          if (m & bit) continue;
          Polynomial factor(vars);
          if (k < n) {
            if (k != j) continue;
            factor = Polynomial::constant(vars, 1);
          } else {
            factor = Polynomial::variable(vars, static_cast<std::size_t>(chart_index(n, k - n, j)));
          }
          auto& slot = next.try_emplace(m | bit, Polynomial(vars)).first->second;
          slot += p * factor * Rational(wedge_sign(m, bit));
        }
      }
      acc = std::move(next);
    }
    const auto it = acc.find((Mask{1} << n) - 1);
    if (it != acc.end()) total += it->second;
  }
  return total;
}

MAEquation pullback_to_equation(const ExteriorForm& w) {
  if (w.degree() != w.n())
    throw Error(ErrorCode::PreconditionViolation, "pullback needs a homogeneous form of degree n");
  const Polynomial p = pullback_polynomial(w);
  if (p.is_zero()) throw Error(ErrorCode::ZeroPullback, "the form pulls back to zero");
  return MAEquation::from_polynomial(w.n(), p);
}

bool is_effective(const ExteriorForm& w) {
  return wedge(w, ExteriorForm::symplectic(w.n())).is_zero();
}

const std::vector<ExteriorForm>& effective_basis(int n) { return effective_data(n).basis; }

ExteriorForm effective_lift(const MAEquation& eq) {
  const EffectiveData& d = effective_data(eq.n());
  const RatVector x = d.lift * eq.coords();
  ExteriorForm w(eq.n());
  for (Index k = 0; k < x.size(); ++k)
    if (!x(k).is_zero()) w += d.basis[k] * x(k);
  return w;
}

RatMatrix b_omega_matrix(const MAEquation& eq) {
  const int n = eq.n();
  const ExteriorForm w = effective_lift(eq);
  const ExteriorForm omega = ExteriorForm::symplectic(n);
  ExteriorForm volume = ExteriorForm::scalar(n, 1);
  for (int i = 0; i < n; ++i) volume = wedge(volume, omega);
  const Mask top = (Mask{1} << (2 * n)) - 1;
  const Rational vol = volume.coefficient(top);
  std::vector<ExteriorForm> contracted;
  for (int a = 0; a < 2 * n; ++a) contracted.push_back(w.interior(a));
  RatMatrix b(2 * n, 2 * n);
  for (int a = 0; a < 2 * n; ++a)
    for (int c = 0; c < 2 * n; ++c)
      b(a, c) = wedge(wedge(contracted[a], contracted[c]), omega).coefficient(top) / vol;
  return b;
}

BOmega b_omega_lambda(const MAEquation& eq) {
  const int n = eq.n();
  if (n % 2 != 0) throw Error(ErrorCode::PreconditionViolation, "B_omega is a multiple of Omega only for even n");
  BOmega out;
  out.b_matrix = b_omega_matrix(eq);
  RatMatrix omega = zero_matrix(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) {
    omega(i, n + i) = 1;
    omega(n + i, i) = -1;
  }
  if (out.b_matrix != RatMatrix(-out.b_matrix.transpose()))
    throw Error(ErrorCode::ProportionalityViolation, "B_omega is not skew-symmetric");
  out.lambda = out.b_matrix(0, n);
  if (out.b_matrix != RatMatrix(out.lambda * omega))
    throw Error(ErrorCode::ProportionalityViolation, "B_omega is not proportional to Omega");
  out.lambda_zero = out.lambda.is_zero();
  return out;
}

}  // namespace sma
