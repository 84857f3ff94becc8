#include "sympma/cli.hpp"

#include "sympma/builtins.hpp"
#include "sympma/forms.hpp"
#include "sympma/integrability.hpp"
#include "sympma/laxpair.hpp"
#include "sympma/liesp.hpp"
#include "sympma/parser.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <bit>
#include <chrono>
#include <fstream>
#include <sstream>

namespace sma {
namespace {

using Json = nlohmann::ordered_json;

struct Flags {
  std::string builtin;
  std::string expr;
  std::string file;
  int n = 4;
  std::uint64_t seed = kDefaultSeed;
  int trials = 0;  // 0: command default
  bool json = false;
  bool timing = false;
  std::string k, q, order, subset, mode, x1, x2, equation;
};

struct Outcome {
  Json report;
  int code = kExitOk;
};

int trials_or(const Flags& f, int fallback) { return f.trials > 0 ? f.trials : fallback; }

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t");
  const auto e = s.find_last_not_of(" \t");
  return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(trim(item));
  return out;
}

std::vector<Rational> parse_rationals(const std::string& text, std::size_t count, const char* what) {
  const auto items = split_list(text);
  if (items.size() != count)
    throw Error(ErrorCode::SyntaxError, std::string(what) + " needs " + std::to_string(count) + " entries");
  std::vector<Rational> out;
  for (const auto& s : items) out.push_back(parse_rational(s));
  return out;
}

// 1-based, distinct, comma separated.
std::vector<int> parse_indices(const std::string& text, int n, const char* what) {
  std::vector<int> out;
  for (const auto& s : split_list(text)) {
    if (s.size() != 1 || s[0] < '1' || s[0] > '0' + n)
      throw Error(ErrorCode::SyntaxError, std::string(what) + ": bad index '" + s + "'");
    const int i = s[0] - '1';
    if (std::find(out.begin(), out.end(), i) != out.end())
      throw Error(ErrorCode::SyntaxError, std::string(what) + ": repeated index " + s);
    out.push_back(i);
  }
  return out;
}

Json one_based(const std::vector<int>& v) {
  Json a = Json::array();
  for (int i : v) a.push_back(i + 1);
  return a;
}

Json matrix_json(const RatMatrix& m) {
  Json rows = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    rows.push_back(row);
  }
  return rows;
}

Json invariants_json(const QuarticInvariants& inv) {
  return Json{{"I", inv.I.str()}, {"J", inv.J.str()}, {"discriminant", inv.discriminant.str()}};
}

Json equation_json(const MAEquation& eq) {
  return Json{{"n", eq.n()}, {"polynomial", eq.poly().to_string()}};
}

MAEquation load_equation(const Flags& f, Json& report) {
  const int given = !f.builtin.empty() + !f.expr.empty() + !f.file.empty();
  if (given != 1)
    throw Error(ErrorCode::PreconditionViolation, "give exactly one of --builtin, --expr, --file");
  if (!f.builtin.empty()) {
    const BuiltinEquation& b = find_builtin(f.builtin);
    report["source"] = "builtin " + b.name;
    return parse_equation(b.expression, b.n);
  }
  if (!f.expr.empty()) {
    report["source"] = "expression";
    return parse_equation(f.expr, f.n);
  }
  std::ifstream in(f.file);
  if (!in) throw Error(ErrorCode::IoError, "cannot read " + f.file);
  std::stringstream buffer;
  buffer << in.rdbuf();
  report["source"] = "file " + f.file;
  return deserialize_equation(buffer.str());
}

void require_n(const MAEquation& eq, int n, const char* command) {
  if (eq.n() != n)
    throw Error(ErrorCode::PreconditionViolation,
                std::string(command) + " needs n = " + std::to_string(n));
}

Json fingerprint_json(const Fingerprint& fp) {
  Json j{{"symmetry_dim", fp.symmetry_dim}, {"lambda_zero", fp.lambda_zero}};
  j["reductive"] = fp.reductive ? Json(*fp.reductive) : Json(nullptr);
  j["nondegenerate"] = fp.nondegenerate;
  return j;
}

Json sample_json(const SampleRecord& r) {
  Json j{{"sample", r.sample.to_string()}, {"outcome", to_string(r.outcome)}};
  if (r.symmetry_dim >= 0) j["symmetry_dim"] = r.symmetry_dim;
  if (!r.reduced.empty()) j["reduced"] = r.reduced;
  return j;
}

Json integrability_json(const IntegrabilityReport& r) {
  Json j{{"verdict", to_string(r.verdict)},
         {"samples_run", r.samples_run},
         {"nondegenerate_samples", r.nondegenerate_samples},
         {"symmetry_dim", r.symmetry_dim}};
  j["failing_sample"] = r.failing_sample ? sample_json(*r.failing_sample) : Json(nullptr);
  Json charts = Json::array();
  for (const auto& q : r.quadratic)
    charts.push_back(Json{{"chart", one_based(q.chart)}, {"singular_dim", q.singular_dim}, {"meets_all", q.meets_all}});
  j["quadratic_charts"] = charts;
  j["quadratic_criterion"] = r.quadratic_criterion ? Json(*r.quadratic_criterion) : Json(nullptr);
  Json osc = Json::array();
  for (const auto& c : r.osculating_charts) osc.push_back(one_based(c));
  j["osculating_charts"] = osc;
  return j;
}

std::vector<std::vector<int>> legendre_subsets(int n) {
  std::vector<std::vector<int>> out;
  for (int size = 0; size <= n; ++size)
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      if (std::popcount(mask) != size) continue;
      std::vector<int> s;
      for (int i = 0; i < n; ++i)
        if (mask & (1u << i)) s.push_back(i);
      out.push_back(s);
    }
  return out;
}


Outcome cmd_identify(const Flags& f) {
  Json rep;
  const MAEquation eq = load_equation(f, rep);
  require_n(eq, 4, "identify");
  rep["equation"] = equation_json(eq);
  const Fingerprint fp = fingerprint(eq);
  rep["name"] = match_fingerprint(fp).value_or("Unknown");
  rep["fingerprint"] = fingerprint_json(fp);
  return {rep};
}

// Case names of the quartic-pair route that carry no fingerprint name.
bool unnamed_case(const std::string& equation) {
  return equation == "degenerate" || equation == "Hess u = 1 (non-integrable)";
}

Outcome cmd_classify(const Flags& f) {
  Json rep;
  const MAEquation eq = load_equation(f, rep);
  require_n(eq, 4, "classify");
  rep["equation"] = equation_json(eq);
  rep["equation_file"] = Json::parse(serialize_equation(eq));

  const Fingerprint fp = fingerprint(eq);
  const std::string name = match_fingerprint(fp).value_or("Unknown");
  rep["name"] = name;
  rep["fingerprint"] = fingerprint_json(fp);

  IntegrabilityOptions opt;
  opt.trials = trials_or(f, opt.trials);
  opt.seed = f.seed;
  const IntegrabilityReport ir = integrable_4d(eq, opt);
  rep["integrability"] = integrability_json(ir);

  Json ef = nullptr;
  std::optional<CaseLabel> label;
  for (const auto& S : legendre_subsets(4)) {
    const MAEquation image = S.empty() ? eq : partial_legendre(eq, S);
    QuarticPair pair;
    try {
      pair = ef_coordinates(image);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::NotInEF) continue;
      throw;
    }
    label = classify_quartic_pair(pair);
    ef = Json{{"chart", one_based(S)},
              {"p", pair.p.to_string()},
              {"q", pair.q.to_string()},
              {"case", label->number},
              {"case_equation", label->recognized ? Json(label->equation) : Json(nullptr)},
              {"recognized", label->recognized},
              {"pattern_p", label->pattern_p},
              {"pattern_q", label->pattern_q},
              {"invariants_p", invariants_json(label->invariants_p)},
              {"invariants_q", invariants_json(label->invariants_q)}};
    ef["singular_dim"] = label->singular_dim ? Json(*label->singular_dim) : Json(nullptr);
    break;
  }
  rep["quartic_pair"] = ef;

  if (!label || !label->recognized) {
    rep["cross_check"] = "not applicable";
  } else {
    const bool agree = label->equation == name || (unnamed_case(label->equation) && name == "Unknown");
    rep["cross_check"] = agree ? "agree" : "disagree";
  }
  rep["seed"] = f.seed;
  rep["trials"] = opt.trials;

  Outcome out{rep};
  if (ir.verdict == Verdict::Integrable && ir.nondegenerate_samples == 0) out.code = kExitInconclusive;
  return out;
}

Outcome cmd_symmetry(const Flags& f) {
  Json rep;
  const MAEquation eq = load_equation(f, rep);
  rep["equation"] = equation_json(eq);
  const LieSubalgebra g = symmetry_algebra(eq);
  const AlgebraSummary s = analyze(g);
  rep["dimension"] = g.dim();
  Json gens = Json::array();
  for (const auto& b : g.basis) gens.push_back(format_sp_element(eq.n(), b));
  rep["generators"] = gens;
  rep["center_dim"] = s.center_dim;
  rep["derived_dim"] = s.derived_dim;
  rep["radical_dim"] = s.radical_dim;
  rep["reductive"] = s.reductive;
  return {rep};
}

Outcome cmd_lambda(const Flags& f) {
  Json rep;
  const MAEquation eq = load_equation(f, rep);
  rep["equation"] = equation_json(eq);
  const BOmega b = b_omega_lambda(eq);
  rep["lambda"] = b.lambda.str();
  rep["lambda_zero"] = b.lambda_zero;
  rep["b_matrix"] = matrix_json(b.b_matrix);
  return {rep};
}

ReductionSample reduction_from_flags(const Flags& f, Json& rep) {
  if (f.k.empty()) {
    if (!f.q.empty() || !f.order.empty())
      throw Error(ErrorCode::PreconditionViolation, "--q and --order need --k");
    Rng rng(f.seed);
    rep["seed"] = f.seed;
    return random_reduction(rng, 10);
  }
  ReductionSample s;
  const auto k = parse_rationals(f.k, 3, "--k");
  std::copy(k.begin(), k.end(), s.k.begin());
  if (!f.q.empty()) {
    const auto q = parse_rationals(f.q, 10, "--q");
    std::size_t at = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i; j < 4; ++j) {
        s.Q(i, j) = q[at];
        s.Q(j, i) = q[at];
        ++at;
      }
  }
  if (!f.order.empty()) {
    const auto order = parse_indices(f.order, 4, "--order");
    if (order.size() != 4) throw Error(ErrorCode::SyntaxError, "--order needs 4 indices");
    std::copy(order.begin(), order.end(), s.order.begin());
  }
  return s;
}

Outcome cmd_reduce(const Flags& f) {
  Json rep;
  const MAEquation eq = load_equation(f, rep);
  require_n(eq, 4, "reduce");
  rep["equation"] = equation_json(eq);
  const ReductionSample s = reduction_from_flags(f, rep);
  rep["sample"] = s.to_string();
  const MAEquation reduced = travelling_wave_reduce(eq, s);
  rep["reduced"] = equation_json(reduced);
  rep["symmetry_dim"] = symmetry_algebra(reduced).dim();
  try {
    rep["linearisability"] = to_string(linearisable_3d(reduced));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NoSamplePoint) throw;
    rep["linearisability"] = "inconclusive";
    return {rep, kExitInconclusive};
  }
  return {rep};
}

Outcome cmd_legendre(const Flags& f) {
  Json rep;
  const MAEquation eq = load_equation(f, rep);
  rep["equation"] = equation_json(eq);
  if (f.subset.empty()) throw Error(ErrorCode::PreconditionViolation, "legendre needs --subset");
  const auto S = parse_indices(f.subset, eq.n(), "--subset");
  const MAEquation image = partial_legendre(eq, S);
  rep["subset"] = one_based(S);
  rep["image"] = equation_json(image);
  rep["involution"] = partial_legendre(image, S).proportional_to(eq);
  return {rep};
}

Outcome cmd_singular(const Flags& f) {
  Json rep;
  const MAEquation eq = load_equation(f, rep);
  rep["equation"] = equation_json(eq);
  std::vector<int> S;
  if (!f.subset.empty()) S = parse_indices(f.subset, eq.n(), "--subset");
  const MAEquation chart = S.empty() ? eq : partial_legendre(eq, S);
  rep["chart"] = one_based(S);
  if (!S.empty()) rep["chart_equation"] = equation_json(chart);
  const SingularLocus locus = singular_locus_quadratic(chart);
  rep["singular_dim"] = locus.dim;
  Json kernel = Json::array();
  for (const auto& m : locus.kernel) kernel.push_back(matrix_json(m));
  rep["kernel"] = kernel;
  MeetsAllOptions opt;
  opt.samples = trials_or(f, opt.samples);
  opt.seed = f.seed;
  const MeetsAllResult meets = meets_all_sublagrangians(chart.n(), locus.kernel, opt);
  rep["meets_all"] = meets.meets;
  rep["best_sampled_rank"] = meets.best_sampled_rank;
  rep["decided_symbolically"] = meets.decided_symbolically;
  rep["seed"] = f.seed;
  rep["trials"] = opt.samples;
  return {rep};
}

Outcome cmd_linearisable(const Flags& f) {
  Json rep;
  const MAEquation eq = load_equation(f, rep);
  require_n(eq, 3, "linearisable");
  rep["equation"] = equation_json(eq);
  rep["symmetry_dim"] = symmetry_algebra(eq).dim();
  try {
    const Linearisability l = linearisable_3d(eq);
    rep["linearisable"] = l == Linearisability::Linearisable;
    rep["status"] = to_string(l);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NoSamplePoint) throw;
    rep["linearisable"] = nullptr;
    rep["status"] = "inconclusive";
    return {rep, kExitInconclusive};
  }
  return {rep};
}

Outcome cmd_basis_info(const Flags& f) {
  const MinorBasis& b = minor_basis(f.n);
  Json rep{{"n", f.n}, {"dimension", b.size()}, {"closed_form", closed_form_dimension(f.n)}};
  rep["degree_dims"] = b.degree_dims;
  Json polys = Json::array();
  for (Index i = 0; i < b.size(); ++i) polys.push_back(b.polys[i].to_string());
  rep["basis"] = polys;
  return {rep};
}

Outcome cmd_lax_check(const Flags& f) {
  Json rep;
  int n = f.n;
  std::string equation = f.equation, x1 = f.x1, x2 = f.x2;
  LaxMode mode = LaxMode::Strict;
  if (!f.builtin.empty()) {
    if (!equation.empty() || !x1.empty() || !x2.empty())
      throw Error(ErrorCode::PreconditionViolation, "--builtin excludes --equation, --x1, --x2");
    const BuiltinLaxPair& p = find_builtin_lax_pair(f.builtin);
    rep["source"] = "builtin " + p.name;
    n = p.n;
    equation = p.equation;
    x1 = p.x1;
    x2 = p.x2;
    mode = p.mode;
  } else {
    if (equation.empty() || x1.empty() || x2.empty())
      throw Error(ErrorCode::PreconditionViolation, "lax-check needs --builtin or all of --equation, --x1, --x2");
    rep["source"] = "expression";
  }
  if (!f.mode.empty()) {
    if (f.mode == "strict") mode = LaxMode::Strict;
    else if (f.mode == "mod-span") mode = LaxMode::ModSpan;
    else throw Error(ErrorCode::SyntaxError, "unknown mode '" + f.mode + "'");
  }
  const ParsedLaxPair pair = parse_lax_pair(n, equation, x1, x2);
  rep["n"] = n;
  rep["equation"] = pair.equation.to_string();
  rep["x1"] = pair.x1.to_string();
  rep["x2"] = pair.x2.to_string();
  rep["mode"] = to_string(mode);
  LaxOptions opt;
  opt.trials = trials_or(f, opt.trials);
  opt.seed = f.seed;
  LaxVerdict v;
  try {
    v = verify_lax(pair.x1, pair.x2, pair.equation, mode, opt);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NoSamplePoint) throw;
    rep["holds"] = nullptr;
    rep["error"] = e.what();
    return {rep, kExitInconclusive};
  }
  rep["holds"] = v.holds;
  rep["trials_run"] = v.trials_run;
  if (v.witness)
    rep["witness"] = Json{{"trial", v.witness->trial}, {"where", v.witness->where}, {"residual", v.witness->residual}};
  else
    rep["witness"] = nullptr;
  rep["seed"] = f.seed;
  rep["trials"] = opt.trials;
  return {rep};
}

// ---- text rendering ----

bool is_flat(const Json& j) {
  if (j.is_object()) return false;
  if (j.is_array())
    return std::all_of(j.begin(), j.end(), [](const Json& e) { return is_flat(e); });
  return true;
}

std::string inline_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "none";
  if (j.is_array()) {
    std::string s = "[";
    for (std::size_t i = 0; i < j.size(); ++i) s += (i ? ", " : "") + inline_text(j[i]);
    return s + "]";
  }
  return j.dump();
}

void render(const Json& obj, std::ostream& out, int indent);

void render_entry(const std::string& key, const Json& v, std::ostream& out, int indent) {
  const std::string pad(indent, ' ');
  if (v.is_object()) {
    out << pad << key << ":\n";
    render(v, out, indent + 2);
    return;
  }
  const bool spaced = v.is_array() && std::any_of(v.begin(), v.end(), [](const Json& e) {
    return e.is_string() && e.get<std::string>().find(' ') != std::string::npos;
  });
  const bool nested = v.is_array() && std::any_of(v.begin(), v.end(), [](const Json& e) { return e.is_array(); });
  if (v.is_array() && (!is_flat(v) || spaced || nested)) {
    out << pad << key << ":\n";
    for (const auto& e : v) {
      if (e.is_object()) {
        out << pad << "  -\n";
        render(e, out, indent + 4);
      } else {
        out << pad << "  - " << inline_text(e) << '\n';
      }
    }
    return;
  }
  out << pad << key << ": " << inline_text(v) << '\n';
}

void render(const Json& obj, std::ostream& out, int indent) {
  for (auto it = obj.begin(); it != obj.end(); ++it) render_entry(it.key(), it.value(), out, indent);
}

void add_source(CLI::App* sub, Flags& f) {
  sub->add_option("--builtin", f.builtin, "named equation");
  sub->add_option("--expr", f.expr, "equation as an expression");
  sub->add_option("--file", f.file, "equation coordinate file");
  sub->add_option("--n", f.n, "dimension for --expr")->check(CLI::Range(2, 4));
}

void add_common(CLI::App* sub, Flags& f) {
  sub->add_option("--seed", f.seed, "random seed");
  sub->add_option("--trials", f.trials, "sampling budget")->check(CLI::PositiveNumber);
  sub->add_flag("--json", f.json, "JSON output");
  sub->add_flag("--timing", f.timing, "report elapsed time");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Symplectic Monge-Ampere equations: classification, symmetries and Lax pairs", "sympma"};
  app.require_subcommand(1);
  Flags f;

  using Command = Outcome (*)(const Flags&);
  std::vector<std::pair<CLI::App*, Command>> commands;
  auto source_command = [&](const char* name, const char* help, Command fn) {
    CLI::App* sub = app.add_subcommand(name, help);
    add_source(sub, f);
    add_common(sub, f);
    commands.emplace_back(sub, fn);
    return sub;
  };
  source_command("classify", "identify, integrability test and quartic-pair case", cmd_classify);
  source_command("identify", "name of the normal form from the symmetry fingerprint", cmd_identify);
  source_command("symmetry", "symmetry algebra inside sp(2n)", cmd_symmetry);
  source_command("lambda", "B = lambda * Omega on the effective form", cmd_lambda);
  CLI::App* reduce = source_command("reduce", "travelling-wave reduction to three dimensions", cmd_reduce);
  reduce->add_option("--k", f.k, "three wave numbers, comma separated");
  reduce->add_option("--q", f.q, "upper triangle of Q, 10 entries row by row");
  reduce->add_option("--order", f.order, "w directions then travelling direction, 1-based");
  CLI::App* legendre = source_command("legendre", "partial Legendre transform", cmd_legendre);
  legendre->add_option("--subset", f.subset, "indices to flip, e.g. 1,2");
  CLI::App* singular = source_command("singular", "singular locus of a quadratic equation", cmd_singular);
  singular->add_option("--subset", f.subset, "Legendre chart to work in");
  source_command("linearisable", "linearisability of a three-dimensional equation", cmd_linearisable);

  CLI::App* lax = app.add_subcommand("lax-check", "verify a Lax pair on the solution variety");
  lax->add_option("--builtin", f.builtin, "named Lax pair");
  lax->add_option("--n", f.n, "dimension")->check(CLI::Range(2, kMaxJetDimension));
  lax->add_option("--equation", f.equation, "equation over u_ij");
  lax->add_option("--x1", f.x1, "first field, linear in d1..dn");
  lax->add_option("--x2", f.x2, "second field, linear in d1..dn");
  lax->add_option("--mode", f.mode, "strict or mod-span");
  add_common(lax, f);
  commands.emplace_back(lax, cmd_lax_check);

  CLI::App* info = app.add_subcommand("basis-info", "the minor basis in dimension n");
  info->add_option("--n", f.n, "dimension")->check(CLI::Range(kMinDimension, kMaxDimension));
  info->add_flag("--json", f.json, "JSON output");
  commands.emplace_back(info, cmd_basis_info);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitRejected;
  }

  for (const auto& [sub, fn] : commands) {
    if (!sub->parsed()) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome result;
    try {
      result = fn(f);
    } catch (const Error& e) {
      err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
      return e.code() == ErrorCode::NoSamplePoint ? kExitInconclusive : kExitRejected;
    }
    Json report{{"command", sub->get_name()}};
    report.update(result.report);
    if (f.timing) {
      const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
      report["elapsed_ms"] = ms.count();
    }
    if (f.json)
      out << report.dump(2) << '\n';
    else
      render(report, out, 0);
    return result.code;
  }
  return kExitRejected;
}

}  // namespace sma
