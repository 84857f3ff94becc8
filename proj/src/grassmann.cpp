#include "sympma/grassmann.hpp"

#include "sympma/linalg.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <map>
#include <mutex>
#include <random>
#include <unordered_map>

namespace sma {

void require_supported_dimension(int n) {
  if (n < kMinDimension || n > kMaxDimension)
    throw Error(ErrorCode::UnsupportedDimension,
                "dimension " + std::to_string(n) + " outside the supported range 2..4");
}

int chart_index(int n, int i, int j) {
  const int a = std::min(i, j);
  const int b = std::max(i, j);
  return a * n - a * (a - 1) / 2 + (b - a);
}

std::string chart_name(int i, int j) {
  const int a = std::min(i, j);
  const int b = std::max(i, j);
  return "u" + std::to_string(a + 1) + std::to_string(b + 1);
}

const Vars& hessian_vars(int n) {
  static const std::array<Vars, 10> cache = [] {
    std::array<Vars, 10> out;
    for (int k = 1; k < 10; ++k) {
      std::vector<std::string> names;
      for (int i = 0; i < k; ++i)
        for (int j = i; j < k; ++j) names.push_back(chart_name(i, j));
      out[k] = make_vars(std::move(names));
    }
    return out;
  }();
  if (n < 1 || n > 9) throw Error(ErrorCode::UnsupportedDimension, "chart dimension out of range");
  return cache[n];
}

PolyMatrix symbolic_hessian(int n) {
  const Vars& vars = hessian_vars(n);
  PolyMatrix m(n, std::vector<Polynomial>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = Polynomial::variable(vars, chart_index(n, i, j));
  return m;
}

namespace {

Polynomial laplace(const PolyMatrix& m, const std::vector<int>& rows,
                   const std::vector<int>& cols, std::size_t depth, std::uint32_t used,
                   std::unordered_map<std::uint32_t, Polynomial>& memo, const Vars& vars) {
  if (depth == rows.size()) return Polynomial::constant(vars, Rational(1));
  if (auto it = memo.find(used); it != memo.end()) return it->second;
  Polynomial sum(vars);
  int sign = 1;
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (used & (1u << c)) continue;
    const Polynomial& entry = m[rows[depth]][cols[c]];
    if (!entry.is_zero()) {
      Polynomial sub = laplace(m, rows, cols, depth + 1, used | (1u << c), memo, vars);
      if (!sub.is_zero()) {
        Polynomial term = entry * sub;
        if (sign > 0) sum += term; else sum -= term;
      }
    }
    sign = -sign;
  }
  memo.emplace(used, sum);
  return sum;
}

Vars matrix_vars(const PolyMatrix& m) {
  for (const auto& row : m)
    for (const auto& e : row)
      if (e.vars()) return e.vars();
  return nullptr;
}

}  // namespace

Polynomial poly_minor(const PolyMatrix& m, const std::vector<int>& rows,
                      const std::vector<int>& cols) {
  if (rows.size() != cols.size())
    throw Error(ErrorCode::PreconditionViolation, "minor of a non-square selection");
  std::unordered_map<std::uint32_t, Polynomial> memo;
  return laplace(m, rows, cols, 0, 0u, memo, matrix_vars(m));
}

Polynomial poly_determinant(const PolyMatrix& m) {
  std::vector<int> idx(m.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
  return poly_minor(m, idx, idx);
}

long closed_form_dimension(int n) {
  auto binom = [](long a, long b) {
    if (b < 0 || b > a) return 0L;
    long r = 1;
    for (long i = 1; i <= b; ++i) r = r * (a - b + i) / i;
    return r;
  };
  return binom(2 * n, n) - binom(2 * n, n + 2);
}

namespace {

std::vector<std::vector<int>> subsets_of_size(int n, int l) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == l) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

MinorBasis build_minor_basis(int n) {
  MinorBasis basis;
  basis.n = n;
  const Vars& vars = hessian_vars(n);
  const PolyMatrix u = symbolic_hessian(n);
  for (int l = 0; l <= n; ++l) {
    basis.degree_offset.push_back(static_cast<int>(basis.polys.size()));
    if (l == 0) {
      basis.polys.push_back(Polynomial::constant(vars, Rational(1)));
      basis.degree.push_back(0);
      basis.pivot.push_back(Monomial(vars->size(), 0));
      basis.degree_dims.push_back(1);
      continue;
    }
    // Minors labelled by unordered pairs {R, C}; minor(R, C) = minor(C, R).
    const auto sets = subsets_of_size(n, l);
    std::vector<Polynomial> minors;
    for (std::size_t r = 0; r < sets.size(); ++r)
      for (std::size_t c = r; c < sets.size(); ++c) minors.push_back(poly_minor(u, sets[r], sets[c]));

    std::map<Monomial, Index, GrlexGreater> column;
    for (const auto& p : minors)
      for (const auto& [m, coef] : p.terms()) column.emplace(m, 0);
    std::vector<Monomial> monomials;
    for (auto& [m, idx] : column) {
      idx = static_cast<Index>(monomials.size());
      monomials.push_back(m);
    }
    RatMatrix coeffs = zero_matrix(static_cast<Index>(minors.size()),
                                   static_cast<Index>(monomials.size()));
    for (std::size_t r = 0; r < minors.size(); ++r)
      for (const auto& [m, coef] : minors[r].terms()) coeffs(static_cast<Index>(r), column[m]) = coef;

    const Echelon e = reduced_echelon(coeffs);
    for (Index r = 0; r < e.rank(); ++r) {
      Polynomial p(vars);
      for (Index c = 0; c < coeffs.cols(); ++c) p.add_term(monomials[c], e.reduced(r, c));
      basis.polys.push_back(std::move(p));
      basis.degree.push_back(l);
      basis.pivot.push_back(monomials[e.pivots[r]]);
    }
    basis.degree_dims.push_back(static_cast<int>(e.rank()));
  }
  return basis;
}

}  // namespace

const MinorBasis& minor_basis(int n) {
  require_supported_dimension(n);
  static const MinorBasis b2 = build_minor_basis(2);
  if (n == 2) return b2;
  static const MinorBasis b3 = build_minor_basis(3);
  if (n == 3) return b3;
  static const MinorBasis b4 = build_minor_basis(4);
  return b4;
}

std::optional<RatVector> decompose(const Polynomial& poly, const MinorBasis& basis) {
  const Vars& vars = hessian_vars(basis.n);
  Polynomial p;
  try {
    p = poly.vars() ? poly.rebase(vars) : Polynomial(vars);
  } catch (const Error&) {
    return std::nullopt;
  }
  RatVector coords(basis.size());
  Polynomial residual = p;
  for (Index k = 0; k < basis.size(); ++k) {
    coords(k) = p.coefficient(basis.pivot[k]);
    if (!coords(k).is_zero()) residual -= basis.polys[k] * coords(k);
  }
  if (!residual.is_zero()) return std::nullopt;
  return coords;
}

Polynomial compose(const RatVector& coords, const MinorBasis& basis) {
  Polynomial p(hessian_vars(basis.n));
  for (Index k = 0; k < basis.size(); ++k)
    if (!coords(k).is_zero()) p += basis.polys[k] * coords(k);
  return p;
}

MAEquation MAEquation::from_polynomial(int n, const Polynomial& poly) {
  const MinorBasis& basis = minor_basis(n);
  if (poly.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "the zero polynomial is not an equation");
  auto coords = decompose(poly, basis);
  if (!coords) {
    throw Error(ErrorCode::NotInSpan,
                "not a combination of minors of the " + std::to_string(n) + "x" +
                    std::to_string(n) + " Hessian: " + poly.to_string());
  }
  return MAEquation(n, poly.rebase(hessian_vars(n)), std::move(*coords));
}

MAEquation MAEquation::from_coords(int n, const RatVector& coords) {
  const MinorBasis& basis = minor_basis(n);
  if (coords.size() != basis.size())
    throw Error(ErrorCode::PreconditionViolation, "coordinate vector has the wrong length");
  if (is_zero(coords)) throw Error(ErrorCode::ZeroPolynomial, "the zero vector is not an equation");
  return MAEquation(n, compose(coords, basis), coords);
}

MAEquation MAEquation::scaled(const Rational& s) const {
  if (s.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "scaling an equation by zero");
  return MAEquation(n_, poly_ * s, RatVector(coords_ * s));
}

MAEquation MAEquation::normalized() const {
  return scaled(Rational(1) / poly_.leading_coefficient());
}

bool MAEquation::proportional_to(const MAEquation& other) const {
  if (n_ != other.n_) return false;
  return normalized().poly() == other.normalized().poly();
}

LagrangePoint LagrangePoint::affine(const RatMatrix& u) {
  if (!is_symmetric(u)) throw Error(ErrorCode::PreconditionViolation, "chart matrix must be symmetric");
  return LagrangePoint{static_cast<int>(u.rows()), {}, u};
}

bool is_symmetric(const RatMatrix& m) {
  if (m.rows() != m.cols()) return false;
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = i + 1; j < m.cols(); ++j)
      if (m(i, j) != m(j, i)) return false;
  return true;
}

std::vector<Rational> chart_point(const RatMatrix& u) {
  const int n = static_cast<int>(u.rows());
  std::vector<Rational> out(chart_size(n));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) out[chart_index(n, i, j)] = u(i, j);
  return out;
}

RatMatrix matrix_from_chart(int n, const RatVector& chart_values) {
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = chart_values(chart_index(n, i, j));
  return m;
}

RatVector plucker_eval(const LagrangePoint& point, const MinorBasis& basis) {
  if (!point.chart.empty())
    throw Error(ErrorCode::Unsupported, "plucker_eval is defined on the affine chart only");
  if (point.n != basis.n) throw Error(ErrorCode::PreconditionViolation, "dimension mismatch");
  const auto values = chart_point(point.matrix);
  RatVector out(basis.size());
  for (Index k = 0; k < basis.size(); ++k) out(k) = basis.polys[k].evaluate(values);
  return out;
}

MAEquation translate(const MAEquation& eq, const RatMatrix& u0) {
  const int n = eq.n();
  if (u0.rows() != n || !is_symmetric(u0))
    throw Error(ErrorCode::PreconditionViolation, "translation must be a symmetric n x n matrix");
  const Vars& vars = hessian_vars(n);
  std::vector<Polynomial> images;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      images.push_back(Polynomial::variable(vars, chart_index(n, i, j)) +
                       Polynomial::constant(vars, u0(i, j)));
  return MAEquation::from_polynomial(n, eq.poly().substitute(images));
}

namespace {

std::vector<int> normalize_subset(int n, std::vector<int> S) {
  std::sort(S.begin(), S.end());
  S.erase(std::unique(S.begin(), S.end()), S.end());
  for (int i : S)
    if (i < 0 || i >= n) throw Error(ErrorCode::PreconditionViolation, "Legendre index out of range");
  return S;
}

RatMatrix build_legendre_matrix(int n, const std::vector<int>& S) {
  const MinorBasis& basis = minor_basis(n);
  const Vars& vars = hessian_vars(n);
  const PolyMatrix u = symbolic_hessian(n);
  std::vector<int> T;
  for (int i = 0; i < n; ++i)
    if (!std::binary_search(S.begin(), S.end(), i)) T.push_back(i);
  const int s = static_cast<int>(S.size());

  const Polynomial d = poly_minor(u, S, S);
  // adj(A)(i, j) = (-1)^(i+j) minor of A without row j and column i
  PolyMatrix adj(s, std::vector<Polynomial>(s));
  for (int i = 0; i < s; ++i) {
    for (int j = 0; j < s; ++j) {
      std::vector<int> rows, cols;
      for (int k = 0; k < s; ++k) {
        if (k != j) rows.push_back(S[k]);
        if (k != i) cols.push_back(S[k]);
      }
      Polynomial m = rows.empty() ? Polynomial::constant(vars, Rational(1)) : poly_minor(u, rows, cols);
      adj[i][j] = ((i + j) % 2 == 0) ? m : -m;
    }
  }
  // numerators of the transformed Hessian over the common denominator d
  PolyMatrix num(n, std::vector<Polynomial>(n, Polynomial(vars)));
  for (int a = 0; a < s; ++a)
    for (int b = 0; b < s; ++b) num[S[a]][S[b]] = adj[a][b];
  PolyMatrix adj_b(s, std::vector<Polynomial>(T.size(), Polynomial(vars)));
  for (int a = 0; a < s; ++a)
    for (std::size_t t = 0; t < T.size(); ++t)
      for (int k = 0; k < s; ++k) adj_b[a][t] += adj[a][k] * u[S[k]][T[t]];
  for (int a = 0; a < s; ++a)
    for (std::size_t t = 0; t < T.size(); ++t) {
      num[S[a]][T[t]] = -adj_b[a][t];
      num[T[t]][S[a]] = -adj_b[a][t];
    }
  for (std::size_t p = 0; p < T.size(); ++p)
    for (std::size_t q = p; q < T.size(); ++q) {
      Polynomial schur = d * u[T[p]][T[q]];
      for (int k = 0; k < s; ++k) schur -= u[S[k]][T[p]] * adj_b[k][q];
      num[T[p]][T[q]] = -schur;
      num[T[q]][T[p]] = -schur;
    }

  std::vector<Polynomial> images;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) images.push_back(num[i][j]);

  RatMatrix out = zero_matrix(basis.size(), basis.size());
  for (Index k = 0; k < basis.size(); ++k) {
    Polynomial image;
    if (basis.degree[k] == 0) {
      image = d;
    } else {
      image = basis.polys[k].substitute(images);
      for (int e = 1; e < basis.degree[k]; ++e) {
        auto q = image.divide_exact(d);
        if (!q) throw Error(ErrorCode::NotInSpan, "Legendre image is not a polynomial");
        image = std::move(*q);
      }
    }
    auto coords = decompose(image, basis);
    if (!coords) throw Error(ErrorCode::NotInSpan, "Legendre image left the minor span");
    out.col(k) = *coords;
  }
  return out;
}

}  // namespace

const RatMatrix& legendre_matrix(int n, const std::vector<int>& S_in) {
  require_supported_dimension(n);
  const std::vector<int> S = normalize_subset(n, S_in);
  static std::mutex mutex;
  static std::map<std::pair<int, std::vector<int>>, RatMatrix> cache;
  {
    std::lock_guard lock(mutex);
    auto it = cache.find({n, S});
    if (it != cache.end()) return it->second;
  }
  RatMatrix m = build_legendre_matrix(n, S);
  std::lock_guard lock(mutex);
  return cache.try_emplace({n, S}, std::move(m)).first->second;
}

MAEquation partial_legendre(const MAEquation& eq, const std::vector<int>& S) {
  const std::vector<int> subset = normalize_subset(eq.n(), S);
  if (subset.empty()) return eq.normalized();
  const RatVector image = legendre_matrix(eq.n(), subset) * eq.coords();
  if (is_zero(image)) throw Error(ErrorCode::DegenerateChart, "Legendre transform produced zero");
  return MAEquation::from_coords(eq.n(), image).normalized();
}

SingularLocus singular_locus_quadratic(const MAEquation& eq) {
  if (!eq.poly().is_homogeneous(2))
    throw Error(ErrorCode::Unsupported,
                "singular locus is implemented for purely quadratic equations only");
  const int n = eq.n();
  const Index m = chart_size(n);
  SingularLocus out;
  out.form = zero_matrix(m, m);
  for (const auto& [mono, c] : eq.poly().terms()) {
    std::vector<Index> vars;
    for (std::size_t i = 0; i < mono.size(); ++i)
      for (Exponent e = 0; e < mono[i]; ++e) vars.push_back(static_cast<Index>(i));
    if (vars[0] == vars[1]) {
      out.form(vars[0], vars[0]) += 2 * c;
    } else {
      out.form(vars[0], vars[1]) += c;
      out.form(vars[1], vars[0]) += c;
    }
  }
  const RankKernel rk = rank_kernel(out.form);
  out.dim = static_cast<int>(m - rk.rank);
  for (const auto& v : rk.kernel) out.kernel.push_back(matrix_from_chart(n, v));
  return out;
}

namespace {

RatMatrix sampled_jacobian(int n, const std::vector<RatMatrix>& kernel,
                           const std::vector<Rational>& t, const RatVector& x) {
  const Index k = static_cast<Index>(kernel.size());
  RatMatrix jac = zero_matrix(2 * n, n + k);
  RatMatrix u = zero_matrix(n, n);
  for (Index j = 0; j < k; ++j) u += kernel[j] * t[j];
  for (int i = 0; i < n; ++i) jac(i, i) = 1;
  jac.block(n, 0, n, n) = u;
  for (Index j = 0; j < k; ++j) jac.block(n, n + j, n, 1) = kernel[j] * x;
  return jac;
}

bool symbolic_full_rank(int n, const std::vector<RatMatrix>& kernel) {
  const int k = static_cast<int>(kernel.size());
  std::vector<std::string> names;
  for (int j = 0; j < k; ++j) names.push_back("t" + std::to_string(j + 1));
  for (int i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
  const Vars vars = make_vars(std::move(names));
  auto t = [&](int j) { return Polynomial::variable(vars, j); };
  auto x = [&](int i) { return Polynomial::variable(vars, k + i); };

  PolyMatrix jac(2 * n, std::vector<Polynomial>(n + k, Polynomial(vars)));
  for (int i = 0; i < n; ++i) jac[i][i] = Polynomial::constant(vars, Rational(1));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int m = 0; m < k; ++m)
        if (!kernel[m](i, j).is_zero()) jac[n + i][j] += t(m) * kernel[m](i, j);
  for (int m = 0; m < k; ++m)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (!kernel[m](i, j).is_zero()) jac[n + i][n + m] += x(j) * kernel[m](i, j);

  std::vector<int> rows(2 * n);
  for (int i = 0; i < 2 * n; ++i) rows[i] = i;
  std::vector<int> cols;
  bool found = false;
  auto rec = [&](auto&& self, int start) -> void {
    if (found) return;
    if (static_cast<int>(cols.size()) == 2 * n) {
      if (!poly_minor(jac, rows, cols).is_zero()) found = true;
      return;
    }
    for (int c = start; c < n + k; ++c) {
      cols.push_back(c);
      self(self, c + 1);
      cols.pop_back();
    }
  };
  rec(rec, 0);
  return found;
}

}  // namespace

MeetsAllResult meets_all_sublagrangians(int n, const std::vector<RatMatrix>& kernel,
                                        const MeetsAllOptions& options) {
  MeetsAllResult result;
  for (const auto& b : kernel)
    if (b.rows() != n || !is_symmetric(b))
      throw Error(ErrorCode::PreconditionViolation, "kernel directions must be symmetric n x n");
  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<long> dist(-options.range, options.range);
  for (int s = 0; s < options.samples; ++s) {
    std::vector<Rational> t(kernel.size());
    for (auto& v : t) v = dist(rng);
    RatVector x(n);
    for (int i = 0; i < n; ++i) x(i) = dist(rng);
    const Index r = rank(sampled_jacobian(n, kernel, t, x));
    result.best_sampled_rank = std::max(result.best_sampled_rank, r);
    if (r == 2 * n) {
      result.meets = true;
      return result;
    }
  }
  if (options.symbolic_fallback && static_cast<int>(kernel.size()) >= n) {
    result.decided_symbolically = true;
    result.meets = symbolic_full_rank(n, kernel);
  } else if (options.symbolic_fallback) {
    result.decided_symbolically = true;  // fewer columns than 2n: rank deficient
  }
  return result;
}

bool osculating_containment(const MAEquation& eq, const LagrangePoint& point) {
  if (!point.chart.empty())
    throw Error(ErrorCode::Unsupported, "osculating containment is tested on the affine chart");
  const MAEquation moved = translate(eq, point.matrix);
  const MinorBasis& basis = minor_basis(eq.n());
  for (Index k = 0; k < basis.size(); ++k)
    if (basis.degree[k] <= eq.n() - 2 && !moved.coords()(k).is_zero()) return false;
  return true;
}

std::string serialize_equation(const MAEquation& eq) {
  nlohmann::ordered_json j;
  j["format"] = "sympma-equation";
  j["version"] = 1;
  j["n"] = eq.n();
  auto coords = nlohmann::ordered_json::array();
  for (Index k = 0; k < eq.coords().size(); ++k) coords.push_back(format_rational(eq.coords()(k)));
  j["coords"] = coords;
  return j.dump(2) + "\n";
}

MAEquation deserialize_equation(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::SyntaxError, std::string("equation file: ") + e.what());
  }
  if (!j.contains("n") || !j.contains("coords") || !j["coords"].is_array())
    throw Error(ErrorCode::SyntaxError, "equation file needs \"n\" and \"coords\"");
  if (j.contains("version") && j["version"] != 1)
    throw Error(ErrorCode::SyntaxError, "unsupported equation file version");
  const int n = j["n"].get<int>();
  const MinorBasis& basis = minor_basis(n);
  const auto& arr = j["coords"];
  if (static_cast<Index>(arr.size()) != basis.size())
    throw Error(ErrorCode::SyntaxError, "equation file has " + std::to_string(arr.size()) +
                                            " coordinates, expected " + std::to_string(basis.size()));
  RatVector coords(basis.size());
  for (Index k = 0; k < basis.size(); ++k) {
    const auto& v = arr[static_cast<std::size_t>(k)];
    coords(k) = v.is_string() ? parse_rational(v.get<std::string>())
                              : Rational(v.get<long>());
  }
  return MAEquation::from_coords(n, coords);
}

}  // namespace sma
