#include "hermult/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "hermult/coeffs.hpp"
#include "hermult/errors.hpp"
#include "hermult/hermite.hpp"
#include "hermult/spd.hpp"
#include "hermult/verify.hpp"

namespace hermult {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitInput = 2;

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open '" + path + "'");
  }
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError("malformed JSON in '" + path + "': " + e.what());
  }
}

const Json& require_field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(std::string("problem spec is missing \"") + key + "\"");
  }
  return j.at(key);
}

CoeffVariant parse_variant(const std::string& name) {
  if (name == "symmetrized") {
    return CoeffVariant::Symmetrized;
  }
  if (name == "paper-literal") {
    return CoeffVariant::PaperLiteral;
  }
  throw ParseError("unknown variant '" + name + "' (expected symmetrized or paper-literal)");
}

const char* variant_label(CoeffVariant v) {
  return v == CoeffVariant::Symmetrized ? "symmetrized" : "paper-literal";
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    out.push_back(item);
  }
  if (out.empty()) {
    throw ParseError("empty list '" + text + "'");
  }
  return out;
}

Vector<double> parse_point(const std::string& text) {
  Vector<double> out;
  for (const auto& item : split_commas(text)) {
    char* end = nullptr;
    const double v = std::strtod(item.c_str(), &end);
    if (item.empty() || end != item.c_str() + item.size() || !std::isfinite(v)) {
      throw ParseError("malformed coordinate '" + item + "' in --at");
    }
    out.push_back(v);
  }
  return out;
}

MultiIndex parse_multiindex(const std::string& text) {
  std::vector<unsigned> parts;
  for (const auto& item : split_commas(text)) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos || item.size() > 6) {
      throw ParseError("malformed multi-index entry '" + item + "' in --k");
    }
    parts.push_back(static_cast<unsigned>(std::stoul(item)));
  }
  return MultiIndex(std::move(parts));
}

HermiteFamily parse_family(const std::string& name, const std::optional<ProblemSpec>& spec) {
  if (name == "he") {
    return Probabilists{};
  }
  if (name == "h") {
    return Physicists{};
  }
  if (name.rfind("scaled:", 0) == 0) {
    const std::string value = name.substr(7);
    char* end = nullptr;
    const double variance = std::strtod(value.c_str(), &end);
    if (value.empty() || end != value.c_str() + value.size()) {
      throw ParseError("malformed variance in --family '" + name + "'");
    }
    if (!(variance > 0.0) || !std::isfinite(variance)) {
      throw DomainError("scaled family requires a positive variance");
    }
    return Scaled{variance};
  }
  if (name == "general") {
    if (!spec) {
      throw ParseError("--family general needs --spec for Sigma");
    }
    return General{SpdMatrix<double>::factorize(convert<double>(spec->sigma))};
  }
  throw ParseError("unknown family '" + name + "' (expected he, h, scaled:<variance> or general)");
}

std::string csv_number(double v) { return format_double(v); }

struct ExpandOptions {
  std::string spec;
  std::string variant = "symmetrized";
  std::string format = "json";
};

int run_expand(const ExpandOptions& opt, std::ostream& out) {
  const ProblemSpec spec = load_problem_spec(opt.spec);
  const CoeffVariant variant = parse_variant(opt.variant);
  Json terms = Json::array();
  std::vector<std::pair<MultiIndex, std::string>> rows;
  if (spec.rational) {
    const auto map = transformed_map_from_precision(spec.lambda, inverse(spec.sigma), spec.upsilon);
    for (const auto& term : expand_from_map(spec.k, map, variant)) {
      terms.push_back(Json{{"q", to_json(term.q)}, {"coeff", term.coeff.str()}});
      rows.emplace_back(term.q, term.coeff.str());
    }
  } else {
    const auto sigma = SpdMatrix<double>::factorize(convert<double>(spec.sigma));
    const auto upsilon = SpdMatrix<double>::factorize(convert<double>(spec.upsilon));
    for (const auto& term : expand_general(spec.k, convert<double>(spec.lambda), sigma, upsilon, variant)) {
      terms.push_back(Json{{"q", to_json(term.q)}, {"coeff", term.coeff}});
      rows.emplace_back(term.q, csv_number(term.coeff));
    }
  }
  if (opt.format == "csv") {
    for (std::size_t j = 0; j < spec.m(); ++j) {
      out << "q_" << j + 1 << ',';
    }
    out << "coeff\n";
    for (const auto& [q, coeff] : rows) {
      for (unsigned part : q.parts()) {
        out << part << ',';
      }
      out << coeff << '\n';
    }
  } else {
    out << dump_json(Json{{"k", to_json(spec.k)}, {"variant", variant_label(variant)}, {"terms", terms}}) << '\n';
  }
  return kExitOk;
}

struct EvalOptions {
  std::string family = "he";
  std::string k;
  std::vector<std::string> at;
  std::string spec;
  std::string expansion;
  std::string format = "json";
};

std::vector<ExpansionTerm<double>> read_expansion(const std::string& path, std::size_t m) {
  const Json j = read_json_file(path);
  if (!j.is_object() || !j.contains("terms") || !j.at("terms").is_array()) {
    throw ParseError("expansion file '" + path + "' has no \"terms\" array");
  }
  std::vector<ExpansionTerm<double>> terms;
  for (const auto& item : j.at("terms")) {
    MultiIndex q = multiindex_from_json(require_field(item, "q"));
    if (q.arity() != m) {
      throw DimensionError("expansion term arity does not match Upsilon");
    }
    const Json& c = require_field(item, "coeff");
    const double coeff = c.is_string() ? BigRational::parse(c.get<std::string>()).to_double() : c.get<double>();
    terms.push_back(ExpansionTerm<double>{std::move(q), coeff});
  }
  return terms;
}

int run_eval(const EvalOptions& opt, std::ostream& out) {
  if (opt.at.empty()) {
    throw ParseError("eval needs at least one --at point");
  }
  std::optional<ProblemSpec> spec;
  if (!opt.spec.empty()) {
    spec = load_problem_spec(opt.spec);
  }
  std::vector<Vector<double>> points;
  for (const auto& text : opt.at) {
    points.push_back(parse_point(text));
  }

  Json results = Json::array();
  std::ostringstream csv;
  if (!opt.expansion.empty()) {
    if (!spec) {
      throw ParseError("--expansion needs --spec for Lambda, Sigma and Upsilon");
    }
    const Matrix<double> lambda = convert<double>(spec->lambda);
    const auto sigma = SpdMatrix<double>::factorize(convert<double>(spec->sigma));
    const auto upsilon = SpdMatrix<double>::factorize(convert<double>(spec->upsilon));
    const auto terms = read_expansion(opt.expansion, spec->m());
    for (std::size_t j = 0; j < spec->m(); ++j) {
      csv << "x_" << j + 1 << ',';
    }
    csv << "lhs,rhs\n";
    for (const auto& x : points) {
      if (x.size() != spec->m()) {
        throw DimensionError("--at point must have " + std::to_string(spec->m()) + " coordinates");
      }
      const double lhs = hermite_multi(spec->k, lambda.transpose() * x, sigma);
      const double rhs = evaluate_expansion(terms, x, upsilon.inverse());
      results.push_back(Json{{"x", to_json(x)}, {"lhs", lhs}, {"rhs", rhs}});
      for (double v : x) {
        csv << csv_number(v) << ',';
      }
      csv << csv_number(lhs) << ',' << csv_number(rhs) << '\n';
    }
    if (opt.format == "csv") {
      out << csv.str();
    } else {
      out << dump_json(Json{{"k", to_json(spec->k)}, {"points", results}}) << '\n';
    }
    return kExitOk;
  }

  const HermiteFamily family = parse_family(opt.family, spec);
  MultiIndex k = opt.k.empty() ? (spec ? spec->k : throw ParseError("eval needs --k (or --spec)"))
                               : parse_multiindex(opt.k);
  for (std::size_t j = 0; j < k.arity(); ++j) {
    csv << "x_" << j + 1 << ',';
  }
  csv << "value\n";
  for (const auto& x : points) {
    const double value = hermite_eval(family, k, x);
    results.push_back(Json{{"x", to_json(x)}, {"value", value}});
    for (double v : x) {
      csv << csv_number(v) << ',';
    }
    csv << csv_number(value) << '\n';
  }
  if (opt.format == "csv") {
    out << csv.str();
  } else {
    out << dump_json(Json{{"family", opt.family}, {"k", to_json(k)}, {"points", results}}) << '\n';
  }
  return kExitOk;
}

struct VerifyOptions {
  std::string suite = "all";
  std::optional<std::uint64_t> seed;
  std::optional<unsigned> trials;
  std::optional<double> tol;
  std::optional<unsigned> n_max;
  std::optional<unsigned> m_max;
  std::optional<unsigned> k_max;
  std::optional<unsigned> threads;
  std::string variant = "symmetrized";
};

VerifyReport run_suite(const std::string& suite, const VerifyOptions& opt) {
  TrialConfig cfg = default_config(suite);
  if (opt.seed) cfg.seed = *opt.seed;
  if (opt.trials) cfg.trials = *opt.trials;
  if (opt.tol) cfg.tol_rel = *opt.tol;
  if (opt.n_max) cfg.n_max = *opt.n_max;
  if (opt.m_max) cfg.m_max = *opt.m_max;
  if (opt.k_max) cfg.k_max = *opt.k_max;
  if (opt.threads) cfg.threads = *opt.threads;
  if (cfg.trials == 0 || cfg.n_max == 0 || cfg.m_max == 0) {
    throw ParseError("--trials, --n-max and --m-max must be positive");
  }
  const CoeffVariant variant = parse_variant(opt.variant);
  if (suite == "main") return verify_main_identity(cfg, variant);
  if (suite == "gf") return verify_generating_function(cfg);
  if (suite == "kron") return verify_kron_identity(cfg);
  if (suite == "selector") return verify_selector_suite(cfg);
  if (suite == "univariate") return verify_univariate_closed_forms(cfg);
  if (suite == "inner") return verify_inner_product_identity(cfg);
  if (suite == "oracle") return verify_oracle_equivalence(cfg, variant);
  if (suite == "recurrence") return verify_recurrence_vs_symbolic(cfg);
  throw ParseError("unknown suite '" + suite + "'");
}

int run_verify(const VerifyOptions& opt, std::ostream& out) {
  static const std::vector<std::string> kAll{"main",       "gf",    "kron",   "selector",
                                             "univariate", "inner", "oracle", "recurrence"};
  if (opt.suite != "all") {
    const VerifyReport report = run_suite(opt.suite, opt);
    out << dump_json(to_json(report)) << '\n';
    return report.passed() ? kExitOk : kExitFailed;
  }
  Json reports = Json::array();
  std::uint64_t failures = 0;
  for (const auto& suite : kAll) {
    const VerifyReport report = run_suite(suite, opt);
    failures += report.failures;
    reports.push_back(to_json(report));
  }
  out << dump_json(Json{{"reports", reports}, {"failures", failures}}) << '\n';
  return failures == 0 ? kExitOk : kExitFailed;
}

struct OracleOptions {
  std::string spec;
  std::string variant = "symmetrized";
};

int run_oracle_compare(const OracleOptions& opt, std::ostream& out) {
  const ProblemSpec spec = load_problem_spec(opt.spec);
  const CoeffVariant variant = parse_variant(opt.variant);
  const OracleResult result = oracle_compare(spec.k, spec.lambda, spec.sigma, spec.upsilon, variant);
  Json terms = Json::array();
  for (const auto& term : result.terms) {
    terms.push_back(Json{{"q", to_json(term.q)}, {"coeff", term.coeff.str()}});
  }
  out << dump_json(Json{{"equal", result.equal},
                        {"k", to_json(spec.k)},
                        {"variant", variant_label(variant)},
                        {"terms", terms},
                        {"lhs", to_json(result.lhs)},
                        {"rhs", to_json(result.rhs)},
                        {"diff", to_json(result.diff)}})
      << '\n';
  return result.equal ? kExitOk : kExitFailed;
}

std::string single_line(std::string text) {
  std::replace(text.begin(), text.end(), '\n', ' ');
  return text;
}

}  // namespace

ProblemSpec parse_problem_spec(const Json& j) {
  if (!j.is_object()) {
    throw ParseError("problem spec must be a JSON object");
  }
  ProblemSpec spec;
  spec.k = multiindex_from_json(require_field(j, "k"));
  spec.lambda = rational_matrix_from_json(require_field(j, "Lambda"));
  spec.sigma = rational_matrix_from_json(require_field(j, "Sigma"));
  spec.upsilon = rational_matrix_from_json(require_field(j, "Upsilon"));
  if (j.contains("rational")) {
    if (!j.at("rational").is_boolean()) {
      throw ParseError("\"rational\" must be a boolean");
    }
    spec.rational = j.at("rational").get<bool>();
  }
  const std::size_t n = spec.sigma.rows();
  const std::size_t m = spec.upsilon.rows();
  if (!spec.sigma.is_square() || !spec.upsilon.is_square()) {
    throw DimensionError("Sigma and Upsilon must be square");
  }
  if (spec.lambda.rows() != m || spec.lambda.cols() != n) {
    throw DimensionError("Lambda must be " + std::to_string(m) + "x" + std::to_string(n) + " (m x n), got " +
                         std::to_string(spec.lambda.rows()) + "x" + std::to_string(spec.lambda.cols()));
  }
  if (spec.k.arity() != n) {
    throw DimensionError("k must have arity " + std::to_string(n) + " to match Sigma");
  }
  if (spec.rational) {
    if (!is_symmetric(spec.sigma) || !is_symmetric(spec.upsilon)) {
      throw NotSymmetricError("Sigma and Upsilon must be symmetric");
    }
  } else {
    SpdMatrix<double>::factorize(convert<double>(spec.sigma));
    SpdMatrix<double>::factorize(convert<double>(spec.upsilon));
  }
  return spec;
}

ProblemSpec load_problem_spec(const std::string& path) { return parse_problem_spec(read_json_file(path)); }

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Multiplication theorem for multivariate Hermite polynomials", "hermult"};
  app.require_subcommand(1);

  ExpandOptions expand_opt;
  auto* expand = app.add_subcommand("expand", "Coefficients T_{k,q} for one problem spec");
  expand->add_option("--spec", expand_opt.spec, "Problem spec JSON file")->required();
  expand->add_option("--variant", expand_opt.variant, "symmetrized | paper-literal");
  expand->add_option("--format", expand_opt.format, "json | csv")->check(CLI::IsMember({"json", "csv"}));

  EvalOptions eval_opt;
  auto* eval = app.add_subcommand("eval", "Evaluate Hermite polynomials or an expansion at points");
  eval->add_option("--family", eval_opt.family, "he | h | scaled:<variance> | general");
  eval->add_option("--k", eval_opt.k, "Multi-index, e.g. \"2,1\"");
  eval->add_option("--at", eval_opt.at, "Point \"x1,x2,...\" (repeatable)")->take_all();
  eval->add_option("--spec", eval_opt.spec, "Problem spec JSON file");
  eval->add_option("--expansion", eval_opt.expansion, "Output of `expand` to evaluate");
  eval->add_option("--format", eval_opt.format, "json | csv")->check(CLI::IsMember({"json", "csv"}));

  VerifyOptions verify_opt;
  auto* verify = app.add_subcommand("verify", "Run randomized and exact identity checks");
  verify->add_option("--suite", verify_opt.suite,
                     "main | gf | kron | selector | univariate | inner | oracle | recurrence | all");
  verify->add_option("--seed", verify_opt.seed, "RNG seed");
  verify->add_option("--trials", verify_opt.trials, "Trials (or instances per case for exhaustive suites)");
  verify->add_option("--tol", verify_opt.tol, "Failure threshold on the recorded error");
  verify->add_option("--n-max", verify_opt.n_max, "Largest n");
  verify->add_option("--m-max", verify_opt.m_max, "Largest m");
  verify->add_option("--k-max", verify_opt.k_max, "Largest |k|");
  verify->add_option("--threads", verify_opt.threads, "Worker threads (0 = all cores)");
  verify->add_option("--variant", verify_opt.variant, "symmetrized | paper-literal");

  OracleOptions oracle_opt;
  auto* oracle = app.add_subcommand("oracle-compare", "Exact symbolic check of one problem spec");
  oracle->add_option("--spec", oracle_opt.spec, "Problem spec JSON file")->required();
  oracle->add_option("--variant", oracle_opt.variant, "symmetrized | paper-literal");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << single_line(e.what()) << '\n';
    return kExitInput;
  }

  try {
    if (expand->parsed()) return run_expand(expand_opt, out);
    if (eval->parsed()) return run_eval(eval_opt, out);
    if (verify->parsed()) return run_verify(verify_opt, out);
    if (oracle->parsed()) return run_oracle_compare(oracle_opt, out);
  } catch (const Error& e) {
    err << "error: " << single_line(e.what()) << '\n';
    return kExitInput;
  } catch (const Json::exception& e) {
    err << "error: " << single_line(e.what()) << '\n';
    return kExitInput;
  }
  err << "error: no subcommand\n";
  return kExitInput;
}

}  // namespace hermult
