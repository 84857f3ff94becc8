#include "sympma/laxpair.hpp"

#include "sympma/linalg.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <mutex>

namespace sma {

namespace {

struct JetRing {
  Vars vars;
  Vars input_vars;
  std::vector<std::array<int, 2>> second;  // by variable index
  std::map<std::array<int, 3>, std::size_t> third;
  std::size_t lam = 0;
};

JetRing build_jet_ring(int n) {
  JetRing ring;
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      names.push_back(jet_name({i, j}));
      ring.second.push_back({i, j});
    }
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      for (int k = j; k < n; ++k) {
        ring.third[{i, j, k}] = names.size();
        names.push_back(jet_name({i, j, k}));
      }
  ring.lam = names.size();
  names.push_back("lam");
  ring.vars = make_vars(names);
  for (int i = 0; i < n; ++i) names.push_back("d" + std::to_string(i + 1));
  ring.input_vars = make_vars(names);
  return ring;
}

const JetRing& jet_ring(int n) {
  if (n < 1 || n > kMaxJetDimension)
    throw Error(ErrorCode::UnsupportedDimension, "jet rings need 1 <= n <= 6");
  static std::array<std::once_flag, kMaxJetDimension + 1> flags;
  static std::array<JetRing, kMaxJetDimension + 1> cache;
  std::call_once(flags[n], [n] { cache[n] = build_jet_ring(n); });
  return cache[n];
}

std::size_t third_index(const JetRing& ring, int a, int b, int c) {
  std::array<int, 3> key{a, b, c};
  std::sort(key.begin(), key.end());
  return ring.third.at(key);
}

std::string describe_point(const std::vector<std::optional<Rational>>& point, const Vars& vars) {
  std::string out;
  for (std::size_t v = 0; v < point.size(); ++v) {
    if (!point[v]) continue;
    if (!out.empty()) out += ", ";
    out += (*vars)[v] + "=" + point[v]->str();
  }
  return out;
}

}  // namespace

std::string jet_name(std::vector<int> indices) {
  std::sort(indices.begin(), indices.end());
  std::string name = "u";
  for (int i : indices) name += std::to_string(i + 1);
  return name;
}

const Vars& jet_vars(int n) { return jet_ring(n).vars; }
const Vars& lax_input_vars(int n) { return jet_ring(n).input_vars; }

Polynomial jet_var(int n, std::vector<int> indices) {
  return Polynomial::variable(jet_vars(n), jet_name(std::move(indices)));
}

Polynomial spectral_parameter(int n) { return Polynomial::variable(jet_vars(n), jet_ring(n).lam); }

Polynomial total_derivative(int n, const Polynomial& p, int j) {
  const JetRing& ring = jet_ring(n);
  const Polynomial q = p.rebase(ring.vars);
  Polynomial out(ring.vars);
  for (std::size_t v : q.support()) {
    if (v == ring.lam) continue;
    if (v >= ring.second.size())
      throw Error(ErrorCode::Unsupported, "total derivative of a third derivative is outside the jet ring");
    const auto [a, b] = ring.second[v];
    out += q.derivative(v) * Polynomial::variable(ring.vars, third_index(ring, a, b, j));
  }
  return out;
}

LaxField LaxField::zero(int n) {
  LaxField f;
  f.n = n;
  f.components.assign(n, Polynomial(jet_vars(n)));
  return f;
}

LaxField LaxField::from_linear_form(int n, const Polynomial& form) {
  const Vars& input = lax_input_vars(n);
  const Polynomial p = form.rebase(input);
  const std::size_t first_marker = jet_vars(n)->size();
  LaxField f = zero(n);
  Polynomial rebuilt(input);
  for (int i = 0; i < n; ++i) {
    const std::size_t d = first_marker + static_cast<std::size_t>(i);
    Polynomial coeff = p.coefficient_of_power(d, 1);
    for (std::size_t e = first_marker; e < input->size(); ++e)
      if (coeff.degree_in(e) > 0) throw Error(ErrorCode::SyntaxError, "vector field is not linear in d1..dn");
    rebuilt += coeff * Polynomial::variable(input, d);
    f.components[i] = coeff.rebase(jet_vars(n));
  }
  if (!(rebuilt == p)) throw Error(ErrorCode::SyntaxError, "vector field has terms without a d1..dn marker");
  return f;
}

std::string LaxField::to_string() const {
  const Vars& input = lax_input_vars(n);
  Polynomial p(input);
  for (int i = 0; i < n; ++i)
    p += components[i].rebase(input) * Polynomial::variable(input, "d" + std::to_string(i + 1));
  return p.to_string();
}

LaxField commutator(const LaxField& x, const LaxField& y) {
  if (x.n != y.n) throw Error(ErrorCode::PreconditionViolation, "commutator of fields of different dimension");
  const int n = x.n;
  LaxField out = LaxField::zero(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!x.components[j].is_zero()) out.components[i] += x.components[j] * total_derivative(n, y.components[i], j);
      if (!y.components[j].is_zero()) out.components[i] -= y.components[j] * total_derivative(n, x.components[i], j);
    }
  return out;
}

std::vector<std::optional<Rational>> sample_on_variety(const Polynomial& equation, Rng& rng, long range,
                                                       int budget) {
  int n = 0;
  for (int k = 1; k <= kMaxJetDimension && n == 0; ++k)
    if (same_vars(equation.vars(), jet_vars(k))) n = k;
  if (n == 0) throw Error(ErrorCode::PreconditionViolation, "equation is not over a jet ring");
  const JetRing& ring = jet_ring(n);
  const auto zero = sample_zero(equation, rng, range, budget);
  if (!zero) throw Error(ErrorCode::NoSamplePoint, "no rational point found on the equation");

  // D_k F = sum_ab dF/du_ab u_abk = 0 is linear in the third derivatives.
  const Index unknowns = static_cast<Index>(ring.third.size());
  const std::size_t offset = ring.second.size();
  RatMatrix constraints = zero_matrix(n, unknowns);
  for (std::size_t v = 0; v < ring.second.size(); ++v) {
    const Rational slope = equation.derivative(v).evaluate(*zero);
    if (slope.is_zero()) continue;
    const auto [a, b] = ring.second[v];
    for (int k = 0; k < n; ++k)
      constraints(k, static_cast<Index>(third_index(ring, a, b, k) - offset)) += slope;
  }
  RatVector third = zero_vector(unknowns);
  for (const auto& kv : rank_kernel(constraints).kernel) third += random_integer(rng, range) * kv;

  std::vector<std::optional<Rational>> point(ring.vars->size());
  for (std::size_t v = 0; v < offset; ++v) point[v] = (*zero)[v];
  for (Index t = 0; t < unknowns; ++t) point[offset + static_cast<std::size_t>(t)] = third(t);
  return point;
}

Polynomial jet_equation(const MAEquation& eq) { return eq.poly().rebase(jet_vars(eq.n())); }

const char* to_string(LaxMode m) { return m == LaxMode::Strict ? "strict" : "mod_span"; }

LaxVerdict verify_lax(const LaxField& x1, const LaxField& x2, const Polynomial& equation, LaxMode mode,
                      const LaxOptions& options) {
  if (x1.n != x2.n) throw Error(ErrorCode::PreconditionViolation, "Lax fields of different dimension");
  const int n = x1.n;
  const Vars& vars = jet_vars(n);
  const Polynomial F = equation.rebase(vars);
  const LaxField c = commutator(x1, x2);
  Rng rng(options.seed);
  LaxVerdict verdict;
  std::vector<std::vector<int>> triples;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int d = b + 1; d < n; ++d) triples.push_back({a, b, d});

  for (int t = 0; t < options.trials; ++t) {
    const auto point = sample_on_variety(F, rng, options.range);
    ++verdict.trials_run;
    auto fail = [&](std::string where, const Polynomial& residual) {
      verdict.witness = LaxWitness{t, point, std::move(where), residual.to_string()};
      return verdict;
    };
    if (mode == LaxMode::Strict) {
      for (int i = 0; i < n; ++i) {
        const Polynomial r = c.components[i].partial_evaluate(point);
        if (!r.is_zero()) return fail("component d" + std::to_string(i + 1), r);
      }
    } else {
      PolyMatrix rows(3, std::vector<Polynomial>(n));
      for (int i = 0; i < n; ++i) {
        rows[0][i] = x1.components[i].partial_evaluate(point);
        rows[1][i] = x2.components[i].partial_evaluate(point);
        rows[2][i] = c.components[i].partial_evaluate(point);
      }
      for (const auto& cols : triples) {
        const Polynomial r = poly_minor(rows, {0, 1, 2}, cols);
        if (!r.is_zero()) {
          return fail("minor on d" + std::to_string(cols[0] + 1) + ",d" + std::to_string(cols[1] + 1) + ",d" +
                          std::to_string(cols[2] + 1),
                      r);
        }
      }
    }
  }
  verdict.holds = true;
  return verdict;
}

Polynomial reduce_jet_polynomial(const Polynomial& p, const JetReduction& r) {
  const int n = static_cast<int>(r.M.rows());
  const int m = static_cast<int>(r.M.cols());
  const JetRing& src = jet_ring(n);
  const JetRing& dst = jet_ring(m);
  std::vector<Polynomial> images;
  for (const auto& [a, b] : src.second) {
    Polynomial img = Polynomial::constant(dst.vars, 2 * r.Q(a, b));
    for (int c = 0; c < m; ++c)
      for (int d = 0; d < m; ++d) {
        const Rational w = r.M(a, c) * r.M(b, d);
        if (!w.is_zero()) img += jet_var(m, {c, d}) * w;
      }
    images.push_back(std::move(img));
  }
  for (const auto& [abc, index] : src.third) {
    Polynomial img(dst.vars);
    for (int d = 0; d < m; ++d)
      for (int e = 0; e < m; ++e)
        for (int f = 0; f < m; ++f) {
          const Rational w = r.M(abc[0], d) * r.M(abc[1], e) * r.M(abc[2], f);
          if (!w.is_zero()) img += jet_var(m, {d, e, f}) * w;
        }
    images.push_back(std::move(img));
  }
  images.push_back(spectral_parameter(m));
  return p.rebase(src.vars).substitute(images);
}

LaxField reduce_field(const LaxField& x, const JetReduction& r) {
  const int m = static_cast<int>(r.M.cols());
  if (x.n != r.M.rows()) throw Error(ErrorCode::PreconditionViolation, "reduction does not match the field dimension");
  LaxField out = LaxField::zero(m);
  for (int a = 0; a < x.n; ++a) {
    if (x.components[a].is_zero()) continue;
    const Polynomial reduced = reduce_jet_polynomial(x.components[a], r);
    for (int b = 0; b < m; ++b)
      if (!r.M(a, b).is_zero()) out.components[b] += reduced * r.M(a, b);
  }
  return out;
}

std::pair<LaxField, LaxField> reduce_6d_lax(const LaxField& x1, const LaxField& x2, const JetReduction& r) {
  return {reduce_field(x1, r), reduce_field(x2, r)};
}

Polynomial six_dim_equation() {
  auto u = [](int a, int b) { return jet_var(6, {a - 1, b - 1}); };
  return u(1, 5) + u(2, 6) + u(1, 3) * u(2, 4) - u(1, 4) * u(2, 3);
}

std::pair<LaxField, LaxField> six_dim_pair() {
  auto u = [](int a, int b) { return jet_var(6, {a - 1, b - 1}); };
  const Polynomial one = Polynomial::constant(jet_vars(6), 1);
  const Polynomial lam = spectral_parameter(6);
  LaxField x1 = LaxField::zero(6), x2 = LaxField::zero(6);
  x1.components[5] = one;
  x1.components[3] = u(1, 3);
  x1.components[2] = -u(1, 4);
  x1.components[0] = lam;
  x2.components[4] = one;
  x2.components[3] = -u(2, 3);
  x2.components[2] = u(2, 4);
  x2.components[1] = -lam;
  return {x1, x2};
}

}  // namespace sma
