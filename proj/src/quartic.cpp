#include "sympma/quartic.hpp"

#include <algorithm>
#include <sstream>

namespace sma {

UniPoly::UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void UniPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational UniPoly::operator[](int i) const {
  return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : Rational(0);
}

UniPoly UniPoly::derivative() const {
  std::vector<Rational> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<long>(i));
  return UniPoly(std::move(d));
}

UniPoly UniPoly::monic() const {
  if (c_.empty()) return *this;
  std::vector<Rational> m = c_;
  const Rational lead = c_.back();
  for (auto& x : m) x /= lead;
  return UniPoly(std::move(m));
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly();
  std::vector<Rational> out(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  return UniPoly(std::move(out));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) {
  std::vector<Rational> out(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] -= b.c_[i];
  return UniPoly(std::move(out));
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "division by zero polynomial");
  std::vector<Rational> rem = a.c_;
  const int db = b.degree();
  std::vector<Rational> quot(std::max(0, a.degree() - db + 1), Rational(0));
  for (int k = a.degree() - db; k >= 0; --k) {
    const Rational f = rem[k + db] / b.leading();
    quot[k] = f;
    for (int j = 0; j <= db; ++j) rem[k + j] -= f * b.c_[j];
  }
  return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly UniPoly::gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::vector<UniPoly> squarefree_decomposition(const UniPoly& p) {
  std::vector<UniPoly> out;
  if (p.degree() <= 0) return out;
  const UniPoly dp = p.derivative();
  UniPoly a = UniPoly::gcd(p, dp);
  UniPoly b = UniPoly::divmod(p, a).first;
  UniPoly c = UniPoly::divmod(dp, a).first;
  UniPoly d = c - b.derivative();
  while (b.degree() > 0) {
    a = UniPoly::gcd(b, d);
    out.push_back(a);
    b = UniPoly::divmod(b, a).first;
    c = UniPoly::divmod(d, a).first;
    d = c - b.derivative();
  }
  return out;
}

BinaryQuartic BinaryQuartic::from_coeffs(std::array<long, 5> low_to_high) {
  BinaryQuartic q;
  for (int i = 0; i < 5; ++i) q.a[i] = low_to_high[i];
  return q;
}

bool BinaryQuartic::is_zero() const {
  return std::all_of(a.begin(), a.end(), [](const Rational& x) { return x.is_zero(); });
}

UniPoly BinaryQuartic::as_poly() const { return UniPoly(std::vector<Rational>(a.begin(), a.end())); }

std::string BinaryQuartic::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int i = 4; i >= 0; --i) {
    if (a[i].is_zero()) continue;
    const bool neg = a[i] < 0;
    const Rational mag = neg ? Rational(-a[i]) : a[i];
    os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
    first = false;
    if (i == 0 || mag != 1) os << mag.str() << (i ? "*" : "");
    if (i == 1) os << "t";
    if (i > 1) os << "t^" << i;
  }
  return first ? "0" : os.str();
}

std::vector<int> multiplicity_pattern(const BinaryQuartic& q) {
  if (q.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "multiplicity pattern of the zero quartic");
  const UniPoly p = q.as_poly();
  std::vector<int> pattern;
  if (p.degree() < 4) pattern.push_back(4 - p.degree());
  const auto factors = squarefree_decomposition(p);
  for (std::size_t i = 0; i < factors.size(); ++i)
    for (int r = 0; r < factors[i].degree(); ++r) pattern.push_back(static_cast<int>(i) + 1);
  std::sort(pattern.rbegin(), pattern.rend());
  return pattern;
}

QuarticInvariants quartic_invariants(const BinaryQuartic& q) {
  const Rational A = q.a[4];
  const Rational B = q.a[3] / 4;
  const Rational C = q.a[2] / 6;
  const Rational D = q.a[1] / 4;
  const Rational E = q.a[0];
  QuarticInvariants inv;
  inv.I = A * E - 4 * B * D + 3 * C * C;
  inv.J = A * C * E + 2 * B * C * D - A * D * D - B * B * E - C * C * C;
  inv.discriminant = inv.I * inv.I * inv.I - 27 * inv.J * inv.J;
  return inv;
}

BinaryQuartic sl2_act(const BinaryQuartic& q, const Rational& a, const Rational& b,
                      const Rational& c, const Rational& d) {
  // sum_i q_i (at + b)^i (ct + d)^(4 - i)
  const UniPoly num(std::vector<Rational>{b, a});
  const UniPoly den(std::vector<Rational>{d, c});
  UniPoly total;
  for (int i = 0; i <= 4; ++i) {
    if (q.a[i].is_zero()) continue;
    UniPoly term(std::vector<Rational>{q.a[i]});
    for (int k = 0; k < i; ++k) term = term * num;
    for (int k = i; k < 4; ++k) term = term * den;
    std::vector<Rational> sum(5, Rational(0));
    for (int k = 0; k <= 4; ++k) sum[k] = total[k] + term[k];
    total = UniPoly(std::move(sum));
  }
  BinaryQuartic out;
  for (int k = 0; k <= 4; ++k) out.a[k] = total[k];
  return out;
}

}  // namespace sma
