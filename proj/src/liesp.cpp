#include "sympma/liesp.hpp"

#include "sympma/linalg.hpp"
#include "sympma/sampling.hpp"

#include <array>
#include <cctype>
#include <map>
#include <mutex>
#include <sstream>

namespace sma {

namespace {

constexpr int kMaxFieldDimension = 9;

void require_field_dimension(int n) {
  if (n < 1 || n > kMaxFieldDimension)
    throw Error(ErrorCode::UnsupportedDimension, "sp(2n) generators need 1 <= n <= 9");
}

Polynomial chart_var(int n, int i, int j) {
  return Polynomial::variable(hessian_vars(n), static_cast<std::size_t>(chart_index(n, i, j)));
}

std::vector<SpGenerator> build_generators(int n) {
  std::vector<SpGenerator> out;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) out.push_back({GeneratorKind::X, i, j});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.push_back({GeneratorKind::L, i, j});
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) out.push_back({GeneratorKind::P, i, j});
  return out;
}

// Field coordinates: (component, monomial) -> coefficient; the weight is
// component m.
using FieldKey = std::pair<int, Monomial>;
using FieldCoords = std::map<FieldKey, Rational>;

FieldCoords field_coords(const VectorField& f) {
  FieldCoords out;
  const int m = static_cast<int>(f.components.size());
  for (int k = 0; k <= m; ++k) {
    const Polynomial& p = k < m ? f.components[k] : f.weight;
    for (const auto& [mono, c] : p.terms()) out[{k, mono}] = c;
  }
  return out;
}

struct FieldDecomposer {
  std::vector<FieldCoords> generators;
  std::vector<FieldKey> keys;  // rows where the generator matrix is invertible
  RatMatrix inverse;
};

FieldDecomposer build_decomposer(int n) {
  FieldDecomposer d;
  const auto& gens = sp_generators(n);
  std::map<FieldKey, Index> row_of;
  std::vector<FieldKey> all_keys;
  for (const auto& g : gens) {
    d.generators.push_back(field_coords(generator_field(n, g)));
    for (const auto& [key, c] : d.generators.back()) {
      if (row_of.emplace(key, static_cast<Index>(all_keys.size())).second) all_keys.push_back(key);
    }
  }
  const Index cols = static_cast<Index>(gens.size());
  RatMatrix transposed = zero_matrix(cols, static_cast<Index>(all_keys.size()));
  for (Index g = 0; g < cols; ++g)
    for (const auto& [key, c] : d.generators[g]) transposed(g, row_of.at(key)) = c;
  const Echelon e = reduced_echelon(transposed);
  if (e.rank() != cols)
    throw Error(ErrorCode::PreconditionViolation, "generator fields are linearly dependent");
  RatMatrix square(cols, 2 * cols);
  for (Index r = 0; r < cols; ++r) {
    d.keys.push_back(all_keys[e.pivots[r]]);
    for (Index g = 0; g < cols; ++g) square(r, g) = transposed(g, e.pivots[r]);
    for (Index g = 0; g < cols; ++g) square(r, cols + g) = Rational(r == g ? 1 : 0);
  }
  d.inverse = reduced_echelon(square).reduced.rightCols(cols);
  return d;
}

const FieldDecomposer& decomposer(int n) {
  require_field_dimension(n);
  static std::array<std::once_flag, kMaxFieldDimension + 1> flags;
  static std::array<FieldDecomposer, kMaxFieldDimension + 1> cache;
  std::call_once(flags[n], [n] { cache[n] = build_decomposer(n); });
  return cache[n];
}

std::vector<RatMatrix> build_action_matrices(int n) {
  const MinorBasis& basis = minor_basis(n);
  std::vector<RatMatrix> out;
  for (const auto& g : sp_generators(n)) {
    const VectorField field = generator_field(n, g);
    RatMatrix a(basis.size(), basis.size());
    for (Index k = 0; k < basis.size(); ++k) {
      const auto col = decompose(apply_field(field, basis.polys[k]), basis);
      if (!col)
        throw Error(ErrorCode::NotInSpan, g.label() + " does not preserve the minor span");
      a.col(k) = *col;
    }
    out.push_back(std::move(a));
  }
  return out;
}

// Coordinates of v in a reduced echelon basis, read at the pivots and then
// verified.
std::optional<RatVector> echelon_coordinates(const std::vector<RatVector>& basis,
                                             const std::vector<Index>& pivots,
                                             const RatVector& v) {
  RatVector coeffs(static_cast<Index>(basis.size()));
  RatVector residual = v;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    coeffs(static_cast<Index>(i)) = v(pivots[i]);
    if (!coeffs(static_cast<Index>(i)).is_zero()) residual -= coeffs(static_cast<Index>(i)) * basis[i];
  }
  if (!is_zero(residual)) return std::nullopt;
  return coeffs;
}

std::vector<Index> leading_positions(const std::vector<RatVector>& basis) {
  std::vector<Index> pivots;
  for (const auto& b : basis) {
    Index p = 0;
    while (b(p).is_zero()) ++p;
    pivots.push_back(p);
  }
  return pivots;
}

std::vector<RatVector> rows_of(const RatMatrix& m) {
  std::vector<RatVector> out;
  for (Index r = 0; r < m.rows(); ++r) out.push_back(m.row(r).transpose());
  return out;
}

RatMatrix adjoint(const LieSubalgebra& g, int i) {
  const Index d = g.dim();
  RatMatrix ad(d, d);
  for (Index j = 0; j < d; ++j) ad.col(j) = g.structure[i][j];
  return ad;
}

}  // namespace

std::string SpGenerator::label() const {
  const char k = kind == GeneratorKind::X ? 'X' : kind == GeneratorKind::L ? 'L' : 'P';
  return std::string(1, k) + std::to_string(i + 1) + std::to_string(j + 1);
}

const std::vector<SpGenerator>& sp_generators(int n) {
  require_field_dimension(n);
  static std::array<std::once_flag, kMaxFieldDimension + 1> flags;
  static std::array<std::vector<SpGenerator>, kMaxFieldDimension + 1> cache;
  std::call_once(flags[n], [n] { cache[n] = build_generators(n); });
  return cache[n];
}

int generator_index(int n, std::string_view label) {
  const auto& gens = sp_generators(n);
  for (std::size_t k = 0; k < gens.size(); ++k)
    if (gens[k].label() == label) return static_cast<int>(k);
  if (label.size() == 3 && (label[0] == 'X' || label[0] == 'P') && label[1] > label[2])
    return generator_index(n, std::string{label[0], label[2], label[1]});
  return -1;
}

VectorField generator_field(int n, const SpGenerator& g) {
  const Vars& vars = hessian_vars(n);
  VectorField f;
  f.components.assign(chart_size(n), Polynomial(vars));
  f.weight = Polynomial(vars);
  auto u = [n](int a, int b) { return chart_var(n, a, b); };
  switch (g.kind) {
    case GeneratorKind::X:
      f.components[chart_index(n, g.i, g.j)] = Polynomial::constant(vars, 1);
      break;
    case GeneratorKind::L:
      // dU = E_ij U + U E_ji: row i and column i pick up row j of U.
      for (int a = 0; a < n; ++a)
        for (int b = a; b < n; ++b) {
          Polynomial c(vars);
          if (a == g.i) c += u(g.j, b);
          if (b == g.i) c += u(a, g.j);
          f.components[chart_index(n, a, b)] = c;
        }
      if (g.i == g.j) f.weight = Polynomial::constant(vars, -1);
      break;
    case GeneratorKind::P:
      // dU = U (E_ij + E_ji) U
      for (int a = 0; a < n; ++a)
        for (int b = a; b < n; ++b) {
          f.components[chart_index(n, a, b)] = u(g.i, a) * u(g.j, b) + u(g.j, a) * u(g.i, b);
        }
      f.weight = u(g.i, g.j) * Rational(-2);
      break;
  }
  return f;
}

VectorField element_field(int n, const RatVector& v) {
  const auto& gens = sp_generators(n);
  if (v.size() != static_cast<Index>(gens.size()))
    throw Error(ErrorCode::PreconditionViolation, "sp element has the wrong length");
  const Vars& vars = hessian_vars(n);
  VectorField f;
  f.components.assign(chart_size(n), Polynomial(vars));
  f.weight = Polynomial(vars);
  for (std::size_t k = 0; k < gens.size(); ++k) {
    const Rational& c = v(static_cast<Index>(k));
    if (c.is_zero()) continue;
    const VectorField g = generator_field(n, gens[k]);
    for (std::size_t a = 0; a < f.components.size(); ++a) f.components[a] += g.components[a] * c;
    f.weight += g.weight * c;
  }
  return f;
}

Polynomial apply_field(const VectorField& field, const Polynomial& p) {
  Polynomial out = field.weight * p;
  for (std::size_t k = 0; k < field.components.size(); ++k) {
    if (field.components[k].is_zero()) continue;
    const Polynomial d = p.derivative(k);
    if (!d.is_zero()) out += field.components[k] * d;
  }
  return out;
}

Polynomial apply_generator(int n, const SpGenerator& g, const Polynomial& p) {
  return apply_field(generator_field(n, g), p.rebase(hessian_vars(n)));
}

VectorField commutator(const VectorField& a, const VectorField& b) {
  // (D_a + w_a)(D_b + w_b) - (D_b + w_b)(D_a + w_a)
  //   = D_[a,b] + D_a(w_b) - D_b(w_a)
  auto derive = [](const VectorField& f, const Polynomial& p) {
    VectorField pure{f.components, Polynomial(p.vars())};
    return apply_field(pure, p);
  };
  VectorField out;
  for (std::size_t k = 0; k < a.components.size(); ++k)
    out.components.push_back(derive(a, b.components[k]) - derive(b, a.components[k]));
  out.weight = derive(a, b.weight) - derive(b, a.weight);
  return out;
}

std::optional<RatVector> decompose_field(int n, const VectorField& field) {
  const FieldDecomposer& d = decomposer(n);
  const FieldCoords target = field_coords(field);
  RatVector values(static_cast<Index>(d.keys.size()));
  for (std::size_t r = 0; r < d.keys.size(); ++r) {
    const auto it = target.find(d.keys[r]);
    values(static_cast<Index>(r)) = it == target.end() ? Rational(0) : it->second;
  }
  const RatVector coeffs = d.inverse * values;
  FieldCoords rebuilt;
  for (Index g = 0; g < coeffs.size(); ++g) {
    if (coeffs(g).is_zero()) continue;
    for (const auto& [key, c] : d.generators[g]) rebuilt[key] += coeffs(g) * c;
  }
  std::erase_if(rebuilt, [](const auto& kv) { return kv.second.is_zero(); });
  if (rebuilt != target) return std::nullopt;
  return coeffs;
}

RatVector sp_bracket(int n, const RatVector& v, const RatVector& w) {
  const auto out = decompose_field(n, commutator(element_field(n, v), element_field(n, w)));
  if (!out) throw Error(ErrorCode::PreconditionViolation, "sp(2n) bracket left the generator span");
  return *out;
}

const RatMatrix& generator_action_matrix(int n, std::size_t g) {
  require_supported_dimension(n);
  static std::array<std::once_flag, kMaxDimension + 1> flags;
  static std::array<std::vector<RatMatrix>, kMaxDimension + 1> cache;
  std::call_once(flags[n], [n] { cache[n] = build_action_matrices(n); });
  if (g >= cache[n].size()) throw Error(ErrorCode::PreconditionViolation, "generator index out of range");
  return cache[n][g];
}

RatMatrix action_matrix(int n, const RatVector& v) {
  const Index N = minor_basis(n).size();
  RatMatrix out = zero_matrix(N, N);
  for (Index g = 0; g < v.size(); ++g)
    if (!v(g).is_zero()) out += v(g) * generator_action_matrix(n, static_cast<std::size_t>(g));
  return out;
}

LieSubalgebra LieSubalgebra::span_of(int n, const std::vector<RatVector>& elements) {
  LieSubalgebra g;
  g.n = n;
  g.ambient_dim = sp_dimension(n);
  if (!elements.empty()) g.basis = rows_of(row_space(columns_to_matrix(elements, g.ambient_dim).transpose()));
  const auto pivots = leading_positions(g.basis);
  g.structure.assign(g.basis.size(), std::vector<RatVector>(g.basis.size()));
  for (std::size_t i = 0; i < g.basis.size(); ++i) {
    g.structure[i][i] = zero_vector(g.dim());
    for (std::size_t j = i + 1; j < g.basis.size(); ++j) {
      const auto c = echelon_coordinates(g.basis, pivots, sp_bracket(n, g.basis[i], g.basis[j]));
      if (!c) throw Error(ErrorCode::PreconditionViolation, "span is not closed under the bracket");
      g.structure[i][j] = *c;
      g.structure[j][i] = -*c;
    }
  }
  return g;
}

LieSubalgebra LieSubalgebra::from_structure(std::vector<std::vector<RatVector>> structure) {
  LieSubalgebra g;
  const Index d = static_cast<Index>(structure.size());
  for (Index i = 0; i < d; ++i) {
    RatVector e = zero_vector(d);
    e(i) = 1;
    g.basis.push_back(e);
  }
  g.ambient_dim = static_cast<int>(d);
  g.structure = std::move(structure);
  return g;
}

std::optional<RatVector> LieSubalgebra::coordinates(const RatVector& v) const {
  return echelon_coordinates(basis, leading_positions(basis), v);
}

LieSubalgebra symmetry_algebra(const MAEquation& eq) {
  const int n = eq.n();
  const Index N = eq.coords().size();
  const int dim = sp_dimension(n);
  RatMatrix system(N, dim + 1);
  for (int g = 0; g < dim; ++g) system.col(g) = generator_action_matrix(n, g) * eq.coords();
  system.col(dim) = -eq.coords();
  std::vector<RatVector> elements;
  for (const auto& k : rank_kernel(system).kernel) elements.push_back(k.head(dim));
  return LieSubalgebra::span_of(n, elements);
}

bool stabilizes(const MAEquation& eq, const RatVector& v) {
  const RatVector image = action_matrix(eq.n(), v) * eq.coords();
  RatMatrix pair(eq.coords().size(), 2);
  pair.col(0) = eq.coords();
  pair.col(1) = image;
  return rank(pair) <= 1;
}

RatMatrix killing_form(const LieSubalgebra& g) {
  const int d = g.dim();
  std::vector<RatMatrix> ads;
  for (int i = 0; i < d; ++i) ads.push_back(adjoint(g, i));
  RatMatrix k(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = i; j < d; ++j) k(i, j) = k(j, i) = (ads[i] * ads[j]).trace();
  return k;
}

std::vector<RatVector> solvable_radical(const LieSubalgebra& g) {
  const int d = g.dim();
  if (d == 0) return {};
  std::vector<RatVector> brackets;
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) brackets.push_back(g.structure[i][j]);
  if (brackets.empty()) return rank_kernel(zero_matrix(1, d)).kernel;
  const RatMatrix derived = row_space(columns_to_matrix(brackets, d).transpose());
  return rank_kernel(RatMatrix(derived * killing_form(g))).kernel;
}

std::vector<RatVector> center(const LieSubalgebra& g) {
  const int d = g.dim();
  if (d == 0) return {};
  // x is central iff sum_i x_i [b_i, b_j] = 0 for every j.
  RatMatrix system = zero_matrix(static_cast<Index>(d) * d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) system.block(static_cast<Index>(j) * d, i, d, 1) = g.structure[i][j];
  return rank_kernel(system).kernel;
}

AlgebraSummary analyze(const LieSubalgebra& g) {
  AlgebraSummary s;
  s.dim = g.dim();
  s.center_dim = static_cast<int>(center(g).size());
  std::vector<RatVector> brackets;
  for (int i = 0; i < s.dim; ++i)
    for (int j = i + 1; j < s.dim; ++j) brackets.push_back(g.structure[i][j]);
  s.derived_dim = brackets.empty() ? 0 : static_cast<int>(rank(columns_to_matrix(brackets, s.dim)));
  s.radical_dim = static_cast<int>(solvable_radical(g).size());
  s.reductive = s.radical_dim == s.center_dim;
  return s;
}

bool is_reductive(const LieSubalgebra& g) { return analyze(g).reductive; }

RatMatrix symbol_matrix(const MAEquation& eq, const std::vector<Rational>& point) {
  const int n = eq.n();
  RatMatrix q(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) {
      Rational v = eq.poly().derivative(chart_index(n, a, b)).evaluate(point);
      if (a != b) v /= 2;
      q(a, b) = q(b, a) = v;
    }
  return q;
}

bool nondegenerate(const MAEquation& eq, const NondegeneracyOptions& options) {
  Rng rng(options.seed);
  bool sampled = false;
  for (int s = 0; s < options.samples; ++s) {
    const auto point = sample_zero(eq.poly(), rng, options.range, options.budget);
    if (!point) continue;
    sampled = true;
    if (rank(symbol_matrix(eq, *point)) >= 3) return true;
  }
  if (!sampled) throw Error(ErrorCode::NoSamplePoint, "no rational point found on the equation");
  return false;
}

std::string format_sp_element(int n, const RatVector& v) {
  const auto& gens = sp_generators(n);
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < gens.size(); ++k) {
    const Rational& c = v(static_cast<Index>(k));
    if (c.is_zero()) continue;
    const bool neg = c < 0;
    const Rational mag = neg ? Rational(-c) : c;
    os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
    if (mag != 1) os << mag.str();
    os << gens[k].label();
    first = false;
  }
  return first ? "0" : os.str();
}

RatVector parse_sp_element(int n, std::string_view text) {
  RatVector v = zero_vector(sp_dimension(n));
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& why) {
    throw Error(ErrorCode::SyntaxError, why + " in sp element '" + std::string(text) + "'");
  };
  skip();
  if (text.substr(pos) == "0") return v;
  bool first = true;
  while (true) {
    skip();
    if (pos == text.size()) {
      if (first) fail("empty input");
      break;
    }
    int sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
      skip();
    } else if (!first) {
      fail("expected '+' or '-'");
    }
    const std::size_t start = pos;
    while (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/')) ++pos;
    Rational coeff = start == pos ? Rational(1) : parse_rational(text.substr(start, pos - start));
    skip();
    if (pos < text.size() && text[pos] == '*') {
      ++pos;
      skip();
    }
    if (pos + 3 > text.size()) fail("truncated generator");
    const int g = generator_index(n, text.substr(pos, 3));
    if (g < 0) fail("unknown generator '" + std::string(text.substr(pos, 3)) + "'");
    pos += 3;
    v(g) += sign * coeff;
    first = false;
  }
  return v;
}

}  // namespace sma
