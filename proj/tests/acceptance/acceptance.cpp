// Acceptance criteria AC1-AC8. One line per criterion; nonzero exit on any failure.
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

#include "hermult/cli.hpp"
#include "hermult/coeffs.hpp"
#include "hermult/polyoracle.hpp"
#include "hermult/verify.hpp"

using namespace hermult;
namespace fs = std::filesystem;
using Q = BigRational;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

const std::array<Q, 7> kLambdas{Q(-2), Q(-1), Q(-1, 2), Q(0), Q(1, 2), Q(1), Q(2)};
constexpr unsigned kUnivariateMaxK = 12;

std::string report_detail(const VerifyReport& r) {
  std::ostringstream os;
  os << "checks=" << r.checks_run << " failures=" << r.failures << " max_err=" << format_double(r.max_rel_err)
     << " tol=" << format_double(r.tolerance);
  return os.str();
}

Outcome from_report(const VerifyReport& r, double tol, std::uint64_t min_checks) {
  return {r.failures == 0 && r.checks_run >= min_checks && r.max_rel_err <= tol, report_detail(r)};
}

Outcome ac1() {
  TrialConfig cfg;
  cfg.seed = 1;
  cfg.n_max = 3;
  cfg.m_max = 3;
  cfg.k_max = 4;
  cfg.trials = 20;
  const auto r = verify_oracle_equivalence(cfg, CoeffVariant::Symmetrized);
  // (5 + 15 + 35) multi-indices with |k| <= 4 over n = 1, 2, 3, times 3 values of m, times 20.
  return from_report(r, 0.0, 3300);
}

Outcome ac2() {
  std::uint64_t checks = 0, failures = 0, exact_checks = 0, exact_failures = 0;
  double worst = 0.0;
  const std::array<StandardFamily, 2> families{Probabilists{}, Physicists{}};
  for (const auto& family : families) {
    const bool prob = std::holds_alternative<Probabilists>(family);
    const UnivariateFamily uni = prob ? UnivariateFamily{Probabilists{}} : UnivariateFamily{Physicists{}};
    const auto sigma = SpdMatrix<Q>::isotropic(1, prob ? Q(1) : Q(1, 2));
    for (const Q& lambda_q : kLambdas) {
      const double lambda = lambda_q.to_double();
      for (unsigned k = 0; k <= kUnivariateMaxK; ++k) {
        for (int g = 0; g <= 20; ++g) {
          const double x = -3.0 + 0.3 * g;
          const double lhs = hermite_uni(uni, k, lambda * x);
          double rhs = 0.0, scale = 0.0;
          for (unsigned i = 0; 2 * i <= k; ++i) {
            const double part = coeff_univariate(k, i, lambda, family) * hermite_uni(uni, k - 2 * i, x);
            rhs += part;
            scale += std::abs(part);
          }
          const double err = std::abs(lhs - rhs) / std::max({1.0, std::abs(lhs), scale});
          ++checks;
          worst = std::max(worst, err);
          if (!(err <= 1e-9)) ++failures;
        }
        const RationalMatrix lam{{lambda_q}};
        for (unsigned i = 0; 2 * i <= k; ++i) {
          const MultiIndex q{k - 2 * i};
          const Q uni_c = coeff_univariate(k, i, lambda_q, family);
          const Q vec_c = prob ? coeff_vec_prob(k, q, RationalVector{lambda_q}) : coeff_vec_phys(k, q, RationalVector{lambda_q});
          const Q gen_c = coeff_general({k}, q, lam, sigma, sigma);
          ++exact_checks;
          if (!(uni_c == vec_c && vec_c == gen_c)) ++exact_failures;
        }
      }
    }
  }
  std::ostringstream os;
  os << "grid_checks=" << checks << " failures=" << failures << " max_err=" << format_double(worst)
     << " tol=1e-09 exact_checks=" << exact_checks << " exact_failures=" << exact_failures;
  return {failures == 0 && exact_failures == 0 && worst <= 1e-9, os.str()};
}

Outcome ac3() {
  TrialConfig cfg;
  cfg.seed = 3;
  cfg.trials = 200;
  cfg.m_max = 5;
  cfg.k_max = 8;
  cfg.entry_lo = -2.0;
  cfg.entry_hi = 2.0;
  cfg.tol_rel = 1e-8;
  return from_report(verify_inner_product_identity(cfg), 1e-8, 200);
}

Outcome ac4() {
  TrialConfig cfg;
  cfg.seed = 4;
  cfg.trials = 100;
  cfg.n_max = 3;
  cfg.tol_rel = 1e-10;
  return from_report(verify_generating_function(cfg), 1e-10, 100);
}

Outcome ac5() {
  TrialConfig cfg;
  cfg.seed = 5;
  cfg.trials = 50;
  cfg.n_max = 3;
  cfg.m_max = 3;
  cfg.k_max = 4;
  cfg.tol_rel = 1e-12;
  const auto kron = verify_kron_identity(cfg);
  const auto selector = verify_selector_suite(cfg);
  const Outcome a = from_report(kron, 1e-12, 1);
  const Outcome b = from_report(selector, 0.0, 1);
  return {a.ok && b.ok, "kron: " + a.detail + "; selector: " + b.detail};
}

Outcome ac6() {
  TrialConfig cfg;
  cfg.seed = 6;
  cfg.trials = 1;
  cfg.n_max = 3;
  cfg.k_max = 5;
  cfg.points = 50;
  // (6 + 21 + 56) multi-indices with |k| <= 5 over n = 1, 2, 3, at 50 points.
  return from_report(verify_recurrence_vs_symbolic(cfg), 0.0, 83 * 50);
}

Outcome ac7() {
  const RationalMatrix swap{{Q(0), Q(1)}, {Q(1), Q(0)}};
  const RationalMatrix id = RationalMatrix::identity(2);
  const MPoly x1x2 = MPoly::monomial({1, 1}, Q(1));
  const auto literal = oracle_compare({1, 1}, swap, id, id, CoeffVariant::PaperLiteral);
  const auto sym = oracle_compare({1, 1}, swap, id, id, CoeffVariant::Symmetrized);
  const bool erratum = !literal.equal && literal.rhs.is_zero() && literal.lhs == x1x2 && literal.diff == x1x2;
  const bool fixed = sym.equal && sym.diff.is_zero();

  std::uint64_t agree = 0, disagree = 0;
  for (const Q variance : {Q(1), Q(1, 2)}) {
    const auto sigma = SpdMatrix<Q>::isotropic(1, variance);
    for (const Q& lambda : kLambdas) {
      const RationalMatrix lam{{lambda}};
      for (unsigned k = 0; k <= kUnivariateMaxK; ++k) {
        const bool same = expand_general({k}, lam, sigma, sigma, CoeffVariant::Symmetrized) ==
                          expand_general({k}, lam, sigma, sigma, CoeffVariant::PaperLiteral);
        ++(same ? agree : disagree);
      }
    }
  }
  std::ostringstream os;
  os << "paper-literal rhs=0 diff=x1*x2: " << (erratum ? "yes" : "no")
     << "; symmetrized equal: " << (fixed ? "yes" : "no") << "; n=1 agreement " << agree << "/" << agree + disagree;
  return {erratum && fixed && disagree == 0, os.str()};
}

std::pair<int, std::string> shell(const std::string& command) {
  std::string output;
  FILE* pipe = ::popen(command.c_str(), "r");
  if (pipe == nullptr) return {-1, ""};
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) output.append(buf.data(), n);
  const int status = ::pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, output};
}

Outcome ac8() {
  const fs::path dir = fs::temp_directory_path() / ("hermult_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  const std::string cli = HERMULT_CLI_PATH;
  const fs::path spec_path = dir / "spec.json";
  std::ofstream(spec_path) << R"({"k":[3,1],"Lambda":[[0.5,-1.25],[1.5,0.75],[-0.3,2.0]],)"
                              R"("Sigma":[[2,0.5],[0.5,1]],"Upsilon":[[1.5,0.2,0],[0.2,1,0.1],[0,0.1,0.8]]})";
  const auto expanded = shell(cli + " expand --spec " + spec_path.string());
  const fs::path expansion_path = dir / "expansion.json";
  std::ofstream(expansion_path) << expanded.second;

  const std::array<std::string, 4> points{"0.25,-1,0.5", "1.5,0.125,-0.75", "-2,2,1", "0.1,0.2,0.3"};
  std::string eval_cmd = cli + " eval --spec " + spec_path.string() + " --expansion " + expansion_path.string();
  for (const auto& p : points) eval_cmd += " --at " + p;
  const auto evaluated = shell(eval_cmd);

  bool round_trip = expanded.first == 0 && evaluated.first == 0;
  std::size_t compared = 0;
  if (round_trip) {
    const ProblemSpec problem = load_problem_spec(spec_path.string());
    const auto sigma = spd_factorize(convert<double>(problem.sigma));
    const auto upsilon = spd_factorize(convert<double>(problem.upsilon));
    const auto terms = expand_general(problem.k, convert<double>(problem.lambda), sigma, upsilon);
    const Json j = Json::parse(evaluated.second);
    for (const auto& item : j.at("points")) {
      const double library = evaluate_expansion(terms, vector_from_json(item.at("x")), upsilon.inverse());
      round_trip = round_trip && item.at("rhs").get<double>() == library;
      ++compared;
    }
    round_trip = round_trip && compared == points.size();
  }

  bool deterministic = true;
  for (const std::string& cmd : {cli + " verify --suite main --seed 7 --trials 100",
                                 cli + " verify --suite inner --seed 7 --threads 1",
                                 cli + " expand --spec " + spec_path.string(), eval_cmd}) {
    const auto first = shell(cmd);
    const auto second = shell(cmd);
    deterministic = deterministic && first.first == 0 && first.second == second.second && !first.second.empty();
  }
  const auto threaded = shell(cli + " verify --suite inner --seed 7 --threads 4");
  deterministic = deterministic && threaded.second == shell(cli + " verify --suite inner --seed 7 --threads 1").second;
  fs::remove_all(dir);

  std::ostringstream os;
  os << "round-trip bit-exact: " << (round_trip ? "yes" : "no") << " (" << compared
     << " points); byte-identical reruns: " << (deterministic ? "yes" : "no");
  return {round_trip && deterministic, os.str()};
}

struct Criterion {
  const char* id;
  const char* name;
  double budget_s;
  std::function<Outcome()> body;
};

}  // namespace

int main() {
  const std::array<Criterion, 8> criteria{{
      {"AC1", "exact oracle equivalence, |k|<=4, n,m<=3, 20 instances", 60.0, ac1},
      {"AC2", "univariate closed forms, k<=12, 21-point grid, tol 1e-9, exact agreement", 5.0, ac2},
      {"AC3", "inner-product identity, 200 trials, m<=5, k<=8, tol 1e-8", 10.0, ac3},
      {"AC4", "generating function, D=10, |t|<=0.1, 100 trials, abs tol 1e-10", 5.0, ac4},
      {"AC5", "Kronecker identity exact and tol 1e-12, selector orthonormality", 5.0, ac5},
      {"AC6", "recurrence vs symbolic, |k|<=5, n<=3, 50 points, exact", 30.0, ac6},
      {"AC7", "paper-literal counterexample and n=1 variant agreement", 1.0, ac7},
      {"AC8", "CLI expand/eval round trip and deterministic output", 5.0, ac8},
  }};
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = elapsed <= c.budget_s;
    const bool pass = o.ok && in_time;
    if (!pass) ++failed;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2fs/%.0fs", elapsed, c.budget_s);
    std::cout << (pass ? "[PASS] " : "[FAIL] ") << c.id << ' ' << c.name << " | " << o.detail << " | " << timing
              << (in_time ? "" : " over budget") << '\n';
  }
  std::cout << (failed == 0 ? "all acceptance criteria passed" : std::to_string(failed) + " criteria failed") << '\n';
  return failed == 0 ? 0 : 1;
}
