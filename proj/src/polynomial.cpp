#include "sympma/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace sma {

Vars make_vars(std::vector<std::string> names) {
  return std::make_shared<const std::vector<std::string>>(std::move(names));
}

bool same_vars(const Vars& a, const Vars& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

int find_var(const Vars& vars, std::string_view name) {
  if (!vars) return -1;
  for (std::size_t i = 0; i < vars->size(); ++i)
    if ((*vars)[i] == name) return static_cast<int>(i);
  return -1;
}

int monomial_degree(const Monomial& m) {
  int d = 0;
  for (Exponent e : m) d += e;
  return d;
}

bool GrlexGreater::operator()(const Monomial& a, const Monomial& b) const {
  const int da = monomial_degree(a);
  const int db = monomial_degree(b);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

Polynomial Polynomial::constant(const Vars& vars, const Rational& c) {
  Polynomial p(vars);
  if (!c.is_zero()) p.terms_.emplace(Monomial(p.num_vars(), 0), c);
  return p;
}

Polynomial Polynomial::variable(const Vars& vars, std::size_t index) {
  if (!vars || index >= vars->size())
    throw Error(ErrorCode::PreconditionViolation, "variable index out of range");
  Monomial m(vars->size(), 0);
  m[index] = 1;
  return monomial(vars, std::move(m), Rational(1));
}

Polynomial Polynomial::variable(const Vars& vars, std::string_view name) {
  const int i = find_var(vars, name);
  if (i < 0)
    throw Error(ErrorCode::PreconditionViolation,
                "unknown variable '" + std::string(name) + "'");
  return variable(vars, static_cast<std::size_t>(i));
}

Polynomial Polynomial::monomial(const Vars& vars, Monomial m, const Rational& c) {
  Polynomial p(vars);
  if (!c.is_zero()) p.terms_.emplace(std::move(m), c);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && monomial_degree(terms_.begin()->first) == 0);
}

Rational Polynomial::constant_term() const {
  if (terms_.empty()) return Rational(0);
  // The constant monomial is the smallest in grlex.
  const auto& last = *terms_.rbegin();
  return monomial_degree(last.first) == 0 ? last.second : Rational(0);
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

int Polynomial::total_degree() const {
  if (terms_.empty()) return -1;
  return monomial_degree(terms_.begin()->first);
}

int Polynomial::degree_in(std::size_t var) const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max<int>(d, m[var]);
  return d;
}

bool Polynomial::is_homogeneous(int degree) const {
  for (const auto& [m, c] : terms_)
    if (monomial_degree(m) != degree) return false;
  return true;
}

Polynomial Polynomial::homogeneous_part(int degree) const {
  Polynomial p(vars_);
  for (const auto& [m, c] : terms_)
    if (monomial_degree(m) == degree) p.terms_.emplace_hint(p.terms_.end(), m, c);
  return p;
}

std::vector<std::size_t> Polynomial::support() const {
  std::vector<bool> used(num_vars(), false);
  for (const auto& [m, c] : terms_)
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i]) used[i] = true;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < used.size(); ++i)
    if (used[i]) out.push_back(i);
  return out;
}

const Monomial& Polynomial::leading_monomial() const {
  if (terms_.empty()) throw Error(ErrorCode::ZeroPolynomial, "zero polynomial has no leading term");
  return terms_.begin()->first;
}

const Rational& Polynomial::leading_coefficient() const {
  if (terms_.empty()) throw Error(ErrorCode::ZeroPolynomial, "zero polynomial has no leading term");
  return terms_.begin()->second;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  Polynomial p(vars_);
  for (const auto& [m, c] : terms_) {
    if (m[var] == 0) continue;
    Monomial d = m;
    const Exponent e = d[var]--;
    p.add_term(d, c * e);
  }
  return p;
}

Polynomial Polynomial::coefficient_of_power(std::size_t var, int k) const {
  Polynomial p(vars_);
  for (const auto& [m, c] : terms_) {
    if (m[var] != k) continue;
    Monomial d = m;
    d[var] = 0;
    p.add_term(d, c);
  }
  return p;
}

Polynomial Polynomial::substitute(std::span<const Polynomial> images) const {
  if (images.size() != num_vars())
    throw Error(ErrorCode::PreconditionViolation, "substitute: image count mismatch");
  Vars target;
  for (const auto& img : images)
    if (img.vars()) {
      target = img.vars();
      break;
    }
  Polynomial result(target);
  // Powers of each image are cached because monomials repeat variables.
  std::vector<std::vector<Polynomial>> powers(images.size());
  auto power = [&](std::size_t i, Exponent e) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(Polynomial::constant(target, Rational(1)));
    while (cache.size() <= e) cache.push_back(cache.back() * images[i]);
    return cache[e];
  };
  for (const auto& [m, c] : terms_) {
    Polynomial term = Polynomial::constant(target, c);
    for (std::size_t i = 0; i < m.size() && !term.is_zero(); ++i)
      if (m[i]) term = term * power(i, m[i]);
    result += term;
  }
  return result;
}

Polynomial Polynomial::partial_evaluate(
    std::span<const std::optional<Rational>> values) const {
  if (values.size() != num_vars())
    throw Error(ErrorCode::PreconditionViolation, "partial_evaluate: size mismatch");
  Polynomial p(vars_);
  for (const auto& [m, c] : terms_) {
    Rational coef = c;
    Monomial rest = m;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] && values[i]) {
        Rational f = 1;
        for (Exponent e = 0; e < m[i]; ++e) f *= *values[i];
        coef *= f;
        rest[i] = 0;
      }
    }
    p.add_term(rest, coef);
  }
  return p;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (point.size() != num_vars())
    throw Error(ErrorCode::PreconditionViolation, "evaluate: point size mismatch");
  Rational sum = 0;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < m.size(); ++i)
      for (Exponent e = 0; e < m[i]; ++e) t *= point[i];
    sum += t;
  }
  return sum;
}

Polynomial Polynomial::rebase(const Vars& target) const {
  if (same_vars(vars_, target)) {
    Polynomial p = *this;
    p.vars_ = target;
    return p;
  }
  std::vector<int> where(num_vars(), -1);
  for (std::size_t i = 0; i < num_vars(); ++i) where[i] = find_var(target, (*vars_)[i]);
  Polynomial p(target);
  for (const auto& [m, c] : terms_) {
    Monomial out(target->size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (!m[i]) continue;
      if (where[i] < 0)
        throw Error(ErrorCode::PreconditionViolation,
                    "variable '" + (*vars_)[i] + "' not present in target ring");
      out[where[i]] += m[i];
    }
    p.add_term(out, c);
  }
  return p;
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& divisor) const {
  if (divisor.is_zero())
    throw Error(ErrorCode::ZeroPolynomial, "division by the zero polynomial");
  Polynomial rem = *this;
  rem.adopt(divisor.vars_);
  Polynomial quotient(rem.vars_);
  const Monomial& lead = divisor.leading_monomial();
  const Rational& lead_coef = divisor.leading_coefficient();
  while (!rem.is_zero()) {
    const Monomial lt = rem.leading_monomial();
    Monomial q(lt.size());
    for (std::size_t i = 0; i < lt.size(); ++i) {
      if (lt[i] < lead[i]) return std::nullopt;
      q[i] = lt[i] - lead[i];
    }
    const Rational qc = rem.leading_coefficient() / lead_coef;
    for (const auto& [m, c] : divisor.terms_) {
      Monomial prod = m;
      for (std::size_t i = 0; i < prod.size(); ++i) prod[i] += q[i];
      rem.add_term(prod, -qc * c);
    }
    quotient.add_term(q, qc);
  }
  return quotient;
}

void Polynomial::adopt(const Vars& other) {
  if (!other) return;
  if (!vars_) {
    vars_ = other;
    return;
  }
  if (vars_ != other && !same_vars(vars_, other))
    throw Error(ErrorCode::PreconditionViolation, "polynomials live in different rings");
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  adopt(other.vars_);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  adopt(other.vars_);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& [m, c] : p.terms_) c = -c;
  return p;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial p(a.vars_ ? a.vars_ : b.vars_);
  if (a.vars_ && b.vars_ && a.vars_ != b.vars_ && !same_vars(a.vars_, b.vars_))
    throw Error(ErrorCode::PreconditionViolation, "polynomials live in different rings");
  Monomial prod;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      prod = ma;
      for (std::size_t i = 0; i < prod.size(); ++i) prod[i] += mb[i];
      p.add_term(prod, ca * cb);
    }
  }
  return p;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial result = Polynomial::constant(vars_, Rational(1));
  Polynomial base = *this;
  while (k) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k) base = base * base;
  }
  return result;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.empty() && b.terms_.empty()) return true;
  if (!same_vars(a.vars_, b.vars_)) return false;
  return a.terms_ == b.terms_;
}

std::string format_monomial(const Vars& vars, const Monomial& m) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (!m[i]) continue;
    if (!out.empty()) out += '*';
    out += (*vars)[i];
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const std::string mono = format_monomial(vars_, m);
    if (mono.empty()) {
      os << format_rational(mag);
    } else if (mag == 1) {
      os << mono;
    } else {
      os << format_rational(mag) << '*' << mono;
    }
  }
  return os.str();
}

}  // namespace sma
