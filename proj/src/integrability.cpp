#include "sympma/integrability.hpp"

#include "sympma/forms.hpp"
#include "sympma/liesp.hpp"
#include "sympma/linalg.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace sma {

namespace {

std::string format_order(const std::array<int, 4>& order) {
  std::ostringstream os;
  for (int k = 0; k < 4; ++k) os << (k ? "," : "") << order[k] + 1;
  return os.str();
}

int pattern_class(const BinaryQuartic& q) {
  if (q.is_zero()) return 0;
  const auto pattern = multiplicity_pattern(q);
  if (pattern == std::vector<int>{4}) return 1;
  if (pattern == std::vector<int>{3, 1}) return 2;
  if (pattern == std::vector<int>{2, 2}) return 3;
  if (pattern == std::vector<int>{2, 1, 1}) return 4;
  return 5;
}

Polynomial u4(int i, int j) {
  return Polynomial::variable(hessian_vars(4), static_cast<std::size_t>(chart_index(4, i - 1, j - 1)));
}

Polynomial q2(int a, int b, int c, int d) { return u4(a, b) * u4(c, d); }

std::vector<Polynomial> build_ef_basis() {
  const Rational half(1, 2), sixth(1, 6), third(1, 3);
  const Polynomial shared = (q2(1, 1, 4, 4) - q2(1, 4, 1, 4) + q2(2, 2, 3, 3) - q2(2, 3, 2, 3)) * sixth;
  return {
      q2(1, 1, 2, 2) - q2(1, 2, 1, 2),
      (q2(1, 1, 2, 4) - q2(1, 2, 1, 4) + q2(2, 2, 1, 3) - q2(1, 2, 2, 3)) * half,
      shared + (q2(1, 3, 2, 4) * Rational(2) - q2(1, 4, 2, 3) - q2(1, 2, 3, 4)) * third,
      (q2(3, 3, 2, 4) - q2(2, 3, 3, 4) + q2(4, 4, 1, 3) - q2(1, 4, 3, 4)) * half,
      q2(3, 3, 4, 4) - q2(3, 4, 3, 4),
      q2(1, 1, 3, 3) - q2(1, 3, 1, 3),
      (q2(1, 1, 3, 4) - q2(1, 3, 1, 4) + q2(3, 3, 1, 2) - q2(1, 3, 2, 3)) * half,
      shared + (q2(1, 2, 3, 4) * Rational(2) - q2(1, 4, 2, 3) - q2(1, 3, 2, 4)) * third,
      (q2(2, 2, 3, 4) - q2(2, 3, 2, 4) + q2(4, 4, 1, 2) - q2(1, 4, 2, 4)) * half,
      q2(2, 2, 4, 4) - q2(2, 4, 2, 4),
  };
}

std::vector<std::vector<int>> all_subsets(int n) {
  std::vector<std::vector<int>> out;
  for (int mask = 0; mask < (1 << n); ++mask) {
    std::vector<int> s;
    for (int i = 0; i < n; ++i)
      if (mask & (1 << i)) s.push_back(i);
    out.push_back(std::move(s));
  }
  return out;
}

std::optional<MAEquation> legendre_image(const MAEquation& eq, const std::vector<int>& S) {
  if (S.empty()) return eq;
  try {
    return partial_legendre(eq, S);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::DegenerateChart) return std::nullopt;
    throw;
  }
}

bool safe_nondegenerate(const MAEquation& eq) {
  try {
    return nondegenerate(eq);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::NoSamplePoint) return false;
    throw;
  }
}

}  // namespace

std::string ReductionSample::to_string() const {
  std::ostringstream os;
  os << "k=(" << k[0] << "," << k[1] << "," << k[2] << ") Q=[";
  for (int a = 0; a < 4; ++a)
    for (int b = a; b < 4; ++b) os << (a || b ? "," : "") << Q(a, b);
  os << "] order=(" << format_order(order) << ")";
  return os.str();
}

MAEquation travelling_wave_reduce(const MAEquation& eq, const ReductionSample& s) {
  if (eq.n() != 4) throw Error(ErrorCode::PreconditionViolation, "travelling-wave reduction needs n = 4");
  const Vars& w = hessian_vars(3);
  auto wv = [&w](int a, int b) { return Polynomial::variable(w, static_cast<std::size_t>(chart_index(3, a, b))); };
  std::array<int, 4> role{};
  for (int r = 0; r < 4; ++r) role[s.order[r]] = r;
  std::vector<Polynomial> images(chart_size(4));
  for (int a = 0; a < 4; ++a)
    for (int b = a; b < 4; ++b) {
      const int ra = std::min(role[a], role[b]);
      const int rb = std::max(role[a], role[b]);
      Polynomial img = Polynomial::constant(w, 2 * s.Q(a, b));
      if (rb < 3) {
        img += wv(ra, rb);
      } else if (ra < 3) {
        for (int c = 0; c < 3; ++c) img += wv(ra, c) * s.k[c];
      } else {
        for (int c = 0; c < 3; ++c)
          for (int d = 0; d < 3; ++d) img += wv(c, d) * (s.k[c] * s.k[d]);
      }
      images[chart_index(4, a, b)] = std::move(img);
    }
  const Polynomial reduced = eq.poly().substitute(images);
  if (reduced.is_zero()) throw Error(ErrorCode::ZeroReduction, "travelling-wave reduction vanishes identically");
  return MAEquation::from_polynomial(3, reduced);
}

ReductionSample random_reduction(Rng& rng, long range) {
  ReductionSample s;
  for (auto& k : s.k) k = random_integer(rng, range);
  for (int a = 0; a < 4; ++a)
    for (int b = a; b < 4; ++b) s.Q(a, b) = s.Q(b, a) = random_integer(rng, range);
  for (int i = 3; i > 0; --i) {
    std::uniform_int_distribution<int> pick(0, i);
    std::swap(s.order[i], s.order[pick(rng)]);
  }
  return s;
}

const char* to_string(Linearisability l) {
  switch (l) {
    case Linearisability::Linearisable: return "linearisable";
    case Linearisability::NotLinearisable: return "not linearisable";
    case Linearisability::Degenerate: return "degenerate";
  }
  return "?";
}

Linearisability linearisable_3d(const MAEquation& eq) {
  if (eq.n() != 3) throw Error(ErrorCode::PreconditionViolation, "linearisable_3d needs n = 3");
  if (!nondegenerate(eq)) return Linearisability::Degenerate;
  return symmetry_algebra(eq).dim() == 9 ? Linearisability::Linearisable : Linearisability::NotLinearisable;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Integrable: return "Integrable";
    case Verdict::NotIntegrable: return "NotIntegrable";
    case Verdict::Linearisable: return "Linearisable";
    case Verdict::Degenerate: return "Degenerate";
  }
  return "?";
}

const char* to_string(SampleOutcome o) {
  switch (o) {
    case SampleOutcome::Linearisable: return "linearisable";
    case SampleOutcome::NotLinearisable: return "not linearisable";
    case SampleOutcome::Degenerate: return "degenerate";
    case SampleOutcome::ZeroReduction: return "zero reduction";
    case SampleOutcome::NoSamplePoint: return "no sample point";
  }
  return "?";
}

IntegrabilityReport integrable_4d(const MAEquation& eq, const IntegrabilityOptions& options) {
  if (eq.n() != 4) throw Error(ErrorCode::PreconditionViolation, "integrable_4d needs n = 4");
  IntegrabilityReport report;
  report.symmetry_dim = symmetry_algebra(eq).dim();
  if (!safe_nondegenerate(eq)) {
    report.verdict = Verdict::Degenerate;
    return report;
  }

  Rng rng(options.seed);
  std::vector<ReductionSample> samples;
  for (int t = 0; t < options.trials; ++t) samples.push_back(random_reduction(rng, options.range));
  for (const auto& s : samples) {
    SampleRecord rec;
    rec.sample = s;
    ++report.samples_run;
    try {
      const MAEquation reduced = travelling_wave_reduce(eq, s);
      rec.reduced = reduced.poly().to_string();
      if (!nondegenerate(reduced)) {
        rec.outcome = SampleOutcome::Degenerate;
      } else {
        ++report.nondegenerate_samples;
        rec.symmetry_dim = symmetry_algebra(reduced).dim();
        rec.outcome = rec.symmetry_dim == 9 ? SampleOutcome::Linearisable : SampleOutcome::NotLinearisable;
      }
    } catch (const Error& e) {
      if (e.code() == ErrorCode::ZeroReduction) rec.outcome = SampleOutcome::ZeroReduction;
      else if (e.code() == ErrorCode::NoSamplePoint) rec.outcome = SampleOutcome::NoSamplePoint;
      else throw;
    }
    report.samples.push_back(rec);
    if (rec.outcome == SampleOutcome::NotLinearisable) {
      if (!report.failing_sample) report.failing_sample = rec;
      if (options.stop_at_failure) break;
    }
  }

  const LagrangePoint origin = LagrangePoint::affine(zero_matrix(4, 4));
  for (const auto& S : all_subsets(4)) {
    const auto image = legendre_image(eq, S);
    if (!image) continue;
    if (osculating_containment(*image, origin)) report.osculating_charts.push_back(S);
    if (image->poly().is_homogeneous(2)) {
      const SingularLocus locus = singular_locus_quadratic(*image);
      QuadraticEvidence ev;
      ev.chart = S;
      ev.singular_dim = locus.dim;
      ev.meets_all = meets_all_sublagrangians(4, locus.kernel).meets;
      report.quadratic.push_back(ev);
      report.quadratic_criterion =
          report.quadratic_criterion.value_or(false) || (ev.singular_dim == 4 && ev.meets_all);
    }
  }

  if (report.failing_sample) {
    report.verdict = Verdict::NotIntegrable;
  } else if (report.symmetry_dim == 16) {
    report.verdict = Verdict::Linearisable;
  } else if (report.quadratic_criterion == false) {
    report.verdict = Verdict::NotIntegrable;
  } else {
    report.verdict = Verdict::Integrable;
  }
  return report;
}

const std::vector<Polynomial>& ef_basis() {
  static const std::vector<Polynomial> basis = build_ef_basis();
  return basis;
}

QuarticPair ef_coordinates(const MAEquation& eq) {
  if (eq.n() != 4) throw Error(ErrorCode::PreconditionViolation, "ef_coordinates needs n = 4");
  const auto& basis = ef_basis();
  std::map<Monomial, Index, GrlexGreater> rows;
  auto collect = [&rows](const Polynomial& p) {
    for (const auto& [m, c] : p.terms()) rows.emplace(m, 0);
  };
  for (const auto& b : basis) collect(b);
  collect(eq.poly());
  Index r = 0;
  for (auto& [m, idx] : rows) idx = r++;
  RatMatrix system = zero_matrix(r, static_cast<Index>(basis.size()));
  RatVector rhs = zero_vector(r);
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (const auto& [m, c] : basis[j].terms()) system(rows.at(m), static_cast<Index>(j)) = c;
  for (const auto& [m, c] : eq.poly().terms()) rhs(rows.at(m)) = c;
  const auto sol = solve_linear(system, rhs);
  if (!sol) throw Error(ErrorCode::NotInEF, "equation is not in the span of E_0..E_4, F_0..F_4");
  QuarticPair pair;
  for (int i = 0; i < 5; ++i) {
    pair.p.a[i] = sol->particular(i);
    pair.q.a[i] = -sol->particular(5 + i);
  }
  return pair;
}

MAEquation equation_from_pair(const QuarticPair& pair) {
  const auto& basis = ef_basis();
  Polynomial f(hessian_vars(4));
  for (int i = 0; i < 5; ++i) {
    f += basis[i] * pair.p.a[i];
    f -= basis[5 + i] * pair.q.a[i];
  }
  return MAEquation::from_polynomial(4, f);
}

CaseLabel classify_quartic_pair(const QuarticPair& input) {
  QuarticPair pair = input;
  if (pattern_class(pair.p) < pattern_class(pair.q)) std::swap(pair.p, pair.q);
  CaseLabel label;
  if (!pair.p.is_zero()) label.pattern_p = multiplicity_pattern(pair.p);
  if (!pair.q.is_zero()) label.pattern_q = multiplicity_pattern(pair.q);
  label.invariants_p = quartic_invariants(pair.p);
  label.invariants_q = quartic_invariants(pair.q);
  if (pair.p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "both quartics vanish");

  static const std::map<std::pair<int, int>, std::pair<int, const char*>> table = {
      {{5, 5}, {1, "general heavenly"}},
      {{4, 4}, {2, "Husain"}},
      {{4, 3}, {3, "first heavenly"}},
      {{3, 3}, {4, "degenerate"}},
      {{2, 2}, {5, "modified heavenly"}},
      {{2, 1}, {6, "second heavenly"}},
      {{1, 1}, {7, "degenerate"}},
      {{5, 0}, {8, "Hess u = 1 (non-integrable)"}},
      {{2, 0}, {9, "linear wave"}},
      {{1, 0}, {10, "degenerate"}},
  };
  const std::pair<int, int> key{pattern_class(pair.p), pattern_class(pair.q)};
  const auto it = table.find(key);
  bool match = it != table.end();
  if (match && key == std::pair<int, int>{5, 0}) match = label.invariants_p.harmonic();
  if (match && it->second.first == 1) {
    label.singular_dim = singular_locus_quadratic(equation_from_pair(pair)).dim;
    match = *label.singular_dim == 4;
  }
  if (match) {
    label.number = it->second.first;
    label.equation = it->second.second;
    label.recognized = true;
  } else if (!label.singular_dim) {
    label.singular_dim = singular_locus_quadratic(equation_from_pair(pair)).dim;
  }
  return label;
}

Fingerprint fingerprint(const MAEquation& eq) {
  Fingerprint f;
  const LieSubalgebra g = symmetry_algebra(eq);
  f.symmetry_dim = g.dim();
  f.lambda_zero = b_omega_lambda(eq).lambda_zero;
  if (f.symmetry_dim == 12) f.reductive = is_reductive(g);
  f.nondegenerate = safe_nondegenerate(eq);
  return f;
}

std::optional<std::string> match_fingerprint(const Fingerprint& f) {
  if (!f.nondegenerate) return std::nullopt;
  switch (f.symmetry_dim) {
    case 16: return "linear wave";
    case 14: if (f.lambda_zero) return "second heavenly"; break;
    case 13: return f.lambda_zero ? "modified heavenly" : "first heavenly";
    case 12:
      if (!f.lambda_zero && f.reductive) return *f.reductive ? "general heavenly" : "Husain";
      break;
    default: break;
  }
  return std::nullopt;
}

std::string identify_equation(const MAEquation& eq) {
  if (eq.n() != 4) throw Error(ErrorCode::PreconditionViolation, "identify_equation needs n = 4");
  return match_fingerprint(fingerprint(eq)).value_or("Unknown");
}

}  // namespace sma
