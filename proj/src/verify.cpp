#include "hermult/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <functional>
#include <mutex>
#include <string>
#include <thread>

#include "hermult/hermite.hpp"
#include "hermult/polyoracle.hpp"

namespace hermult {

namespace {

constexpr unsigned kGfTruncation = 10;
constexpr double kGfMaxTNorm = 0.1;

struct Outcome {
  std::uint64_t checks = 0;
  std::uint64_t failures = 0;
  double max_err = 0.0;
  Json worst;
};

// NaN is worse than anything, and stays the worst once seen.
bool worse(double err, double current) {
  if (std::isnan(current)) {
    return false;
  }
  return std::isnan(err) || err > current;
}

// Counts one check. The worst case is replaced when the error grows or is NaN.
void record(Outcome& out, double err, double tol, const std::function<Json()>& inputs) {
  ++out.checks;
  const bool bad = !(err <= tol);
  if (bad) {
    ++out.failures;
  }
  if (out.worst.is_null() || worse(err, out.max_err)) {
    out.max_err = err;
    Json w = inputs();
    w["error"] = std::isfinite(err) ? Json(err) : Json(nullptr);
    out.worst = std::move(w);
  }
}

// Exact checks only record a worst case when they fail.
void record_exact(Outcome& out, bool equal, double err, const std::function<Json()>& inputs) {
  ++out.checks;
  if (equal) {
    return;
  }
  ++out.failures;
  if (out.worst.is_null() || err > out.max_err) {
    out.max_err = std::max(out.max_err, err);
    Json w = inputs();
    w["error"] = err;
    out.worst = std::move(w);
  }
}

double exact_gap(const BigRational& a, const BigRational& b) {
  const double da = a.to_double();
  const double db = b.to_double();
  return std::abs((a - b).to_double()) / std::max({1.0, std::abs(da), std::abs(db)});
}

double guarded_error(double lhs, double rhs, double abs_sum) {
  return std::abs(lhs - rhs) / std::max({1.0, std::abs(lhs), abs_sum});
}

std::vector<Outcome> run_jobs(std::size_t count, unsigned threads, const std::function<Outcome(std::size_t)>& job) {
  std::vector<Outcome> results(count);
  unsigned workers = threads ? threads : std::max(1U, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, count));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) {
      results[i] = job(i);
    }
    return results;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          results[i] = job(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) {
            error = std::current_exception();
          }
        }
      }
    });
  }
  for (auto& t : pool) {
    t.join();
  }
  if (error) {
    std::rethrow_exception(error);
  }
  return results;
}

// Sequential reduction: the earliest job wins ties, so the report does not
// depend on scheduling.
VerifyReport reduce(std::string suite, std::uint64_t seed, double tol, const std::vector<Outcome>& outcomes) {
  VerifyReport report;
  report.suite = std::move(suite);
  report.seed = seed;
  report.tolerance = tol;
  for (const auto& o : outcomes) {
    report.checks_run += o.checks;
    report.failures += o.failures;
    if (o.worst.is_null()) {
      continue;
    }
    if (report.worst_case.is_null() || worse(o.max_err, report.max_rel_err)) {
      report.max_rel_err = o.max_err;
      report.worst_case = o.worst;
    }
  }
  return report;
}

Matrix<double> random_matrix(SplitMix64& rng, std::size_t rows, std::size_t cols, double lo, double hi) {
  Matrix<double> out(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      out(i, j) = rng.uniform(lo, hi);
    }
  }
  return out;
}

Vector<double> random_vector(SplitMix64& rng, std::size_t n, double lo, double hi) {
  Vector<double> out(n);
  for (auto& v : out) {
    v = rng.uniform(lo, hi);
  }
  return out;
}

MultiIndex random_multiindex(SplitMix64& rng, std::size_t arity, unsigned degree) {
  std::vector<unsigned> parts(arity, 0);
  for (unsigned d = 0; d < degree; ++d) {
    ++parts[rng.below(arity)];
  }
  return MultiIndex(std::move(parts));
}

BigRational random_rational(SplitMix64& rng) {
  const long num = rng.between(-3, 3);
  const long den = rng.between(1, 4);
  return BigRational(num, den);
}

RationalMatrix random_rational_matrix(SplitMix64& rng, std::size_t rows, std::size_t cols) {
  RationalMatrix out(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      out(i, j) = random_rational(rng);
    }
  }
  return out;
}

RationalVector random_rational_vector(SplitMix64& rng, std::size_t n) {
  RationalVector out(n);
  for (auto& v : out) {
    v = random_rational(rng);
  }
  return out;
}

RationalMatrix random_rational_spd(SplitMix64& rng, std::size_t n) {
  const RationalMatrix q = random_rational_matrix(rng, n, n);
  return q.transpose() * q + RationalMatrix::identity(n);
}

const char* variant_name(CoeffVariant v) {
  return v == CoeffVariant::Symmetrized ? "symmetrized" : "paper-literal";
}

CoeffVariant variant_from_name(const std::string& name) {
  if (name == "symmetrized") {
    return CoeffVariant::Symmetrized;
  }
  if (name == "paper-literal") {
    return CoeffVariant::PaperLiteral;
  }
  throw ParseError("unknown variant '" + name + "'");
}

StandardFamily family_from_name(const std::string& name) {
  if (name == "he") {
    return Probabilists{};
  }
  if (name == "h") {
    return Physicists{};
  }
  throw ParseError("unknown family '" + name + "'");
}

double main_identity_error(const MultiIndex& k, const Matrix<double>& lambda, const Matrix<double>& sigma_m,
                           const Matrix<double>& upsilon_m, const Vector<double>& x, CoeffVariant variant) {
  const auto sigma = SpdMatrix<double>::factorize(sigma_m);
  const auto upsilon = SpdMatrix<double>::factorize(upsilon_m);
  const double lhs = hermite_multi(k, lambda.transpose() * x, sigma);
  const auto terms = expand_general(k, lambda, sigma, upsilon, variant);
  HermiteEvaluator<double> basis(upsilon.inverse(), x);
  double rhs = 0.0;
  double abs_sum = 0.0;
  for (const auto& term : terms) {
    const double value = term.coeff * basis(term.q);
    rhs += value;
    abs_sum += std::abs(value);
  }
  return guarded_error(lhs, rhs, abs_sum);
}

double gf_error(const Vector<double>& t, const Vector<double>& x, const Matrix<double>& sigma_m) {
  const auto sigma = SpdMatrix<double>::factorize(sigma_m);
  return std::abs(gf_partial_sum(t, x, sigma, kGfTruncation) - gf_closed_form(t, x, sigma));
}

double kron_float_error(const Matrix<double>& a, const Vector<double>& b, const MultiIndex& k) {
  const double lhs = monomial(a.transpose() * b, k);
  const Vector<double> col = colwise_kron_power(a, k);
  const Vector<double> pow = kron_power(b, k.degree());
  double rhs = 0.0;
  double abs_sum = 0.0;
  for (std::size_t i = 0; i < col.size(); ++i) {
    rhs += col[i] * pow[i];
    abs_sum += std::abs(col[i] * pow[i]);
  }
  return guarded_error(lhs, rhs, abs_sum);
}

double univariate_error(const StandardFamily& family, unsigned k, double lambda, double x) {
  const UnivariateFamily uni = std::visit([](const auto& f) -> UnivariateFamily { return f; }, family);
  const double lhs = hermite_uni(uni, k, lambda * x);
  double rhs = 0.0;
  double abs_sum = 0.0;
  for (unsigned i = 0; 2 * i <= k; ++i) {
    const double value = coeff_univariate(k, i, lambda, family) * hermite_uni(uni, k - 2 * i, x);
    rhs += value;
    abs_sum += std::abs(value);
  }
  return guarded_error(lhs, rhs, abs_sum);
}

double inner_product_error(const StandardFamily& family, unsigned k, const Vector<double>& lambda,
                           const Vector<double>& x) {
  const UnivariateFamily uni = std::visit([](const auto& f) -> UnivariateFamily { return f; }, family);
  const bool prob = std::holds_alternative<Probabilists>(family);
  const double lhs = hermite_uni(uni, k, dot(lambda, x));
  double rhs = 0.0;
  double abs_sum = 0.0;
  for (unsigned d : q_support(k)) {
    for (const MultiIndex& q : enumerate_fixed_degree(lambda.size(), d)) {
      const double c = prob ? coeff_vec_prob(k, q, lambda) : coeff_vec_phys(k, q, lambda);
      const double value = c * hermite_multi_product(q, x, family);
      rhs += value;
      abs_sum += std::abs(value);
    }
  }
  return guarded_error(lhs, rhs, abs_sum);
}

const char* family_name(const StandardFamily& f) { return std::holds_alternative<Probabilists>(f) ? "he" : "h"; }

}  // namespace

Matrix<double> random_spd(SplitMix64& rng, std::size_t n, double lo, double hi) {
  const Matrix<double> q = random_matrix(rng, n, n, lo, hi);
  Matrix<double> s = q.transpose() * q + Matrix<double>::identity(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      s(j, i) = s(i, j);
    }
  }
  return s;
}

Json to_json(const VerifyReport& report) {
  return Json{{"suite", report.suite},
              {"checks_run", report.checks_run},
              {"failures", report.failures},
              {"max_rel_err", report.max_rel_err},
              {"tolerance", report.tolerance},
              {"worst_case", report.worst_case},
              {"rng", report.rng},
              {"seed", report.seed}};
}

VerifyReport verify_main_identity(const TrialConfig& cfg, CoeffVariant variant) {
  auto outcomes = run_jobs(cfg.trials, cfg.threads, [&](std::size_t trial) {
    SplitMix64 rng = SplitMix64::stream(cfg.seed, trial);
    const std::size_t n = 1 + rng.below(cfg.n_max);
    const std::size_t m = 1 + rng.below(cfg.m_max);
    const Matrix<double> lambda = random_matrix(rng, m, n, cfg.entry_lo, cfg.entry_hi);
    const Matrix<double> sigma = random_spd(rng, n, cfg.entry_lo, cfg.entry_hi);
    const Matrix<double> upsilon = random_spd(rng, m, cfg.entry_lo, cfg.entry_hi);
    const MultiIndex k = random_multiindex(rng, n, static_cast<unsigned>(rng.below(cfg.k_max + 1)));
    const Vector<double> x = random_vector(rng, m, cfg.entry_lo, cfg.entry_hi);
    Outcome out;
    record(out, main_identity_error(k, lambda, sigma, upsilon, x, variant), cfg.tol_rel, [&] {
      return Json{{"suite", "main"},       {"trial", trial},          {"k", to_json(k)},
                  {"Lambda", to_json(lambda)}, {"Sigma", to_json(sigma)}, {"Upsilon", to_json(upsilon)},
                  {"x", to_json(x)},       {"variant", variant_name(variant)}};
    });
    return out;
  });
  return reduce("main", cfg.seed, cfg.tol_rel, outcomes);
}

VerifyReport verify_generating_function(const TrialConfig& cfg) {
  auto outcomes = run_jobs(cfg.trials, cfg.threads, [&](std::size_t trial) {
    SplitMix64 rng = SplitMix64::stream(cfg.seed, trial);
    const std::size_t n = 1 + rng.below(std::min(cfg.n_max, 3U));
    const Matrix<double> sigma = random_spd(rng, n, cfg.entry_lo, cfg.entry_hi);
    Vector<double> t = random_vector(rng, n, -1.0, 1.0);
    const double t_norm = std::sqrt(dot(t, t));
    const double radius = kGfMaxTNorm * rng.uniform(0.0, 1.0);
    for (auto& v : t) {
      v = t_norm > 0.0 ? v * radius / t_norm : 0.0;
    }
    Vector<double> x = random_vector(rng, n, -1.0, 1.0);
    const double x_norm = std::sqrt(dot(x, x));
    if (x_norm > 1.0) {
      for (auto& v : x) {
        v /= x_norm;
      }
    }
    Outcome out;
    record(out, gf_error(t, x, sigma), cfg.tol_rel, [&] {
      return Json{{"suite", "gf"}, {"trial", trial}, {"t", to_json(t)}, {"x", to_json(x)}, {"Sigma", to_json(sigma)}};
    });
    return out;
  });
  return reduce("gf", cfg.seed, cfg.tol_rel, outcomes);
}

VerifyReport verify_kron_identity(const TrialConfig& cfg) {
  const unsigned dim_cap = std::min(cfg.n_max, 4U);
  const unsigned degree_cap = std::min(cfg.k_max, 4U);
  auto outcomes = run_jobs(cfg.trials, cfg.threads, [&](std::size_t trial) {
    SplitMix64 rng = SplitMix64::stream(cfg.seed, trial);
    const std::size_t rows = 1 + rng.below(dim_cap);
    const std::size_t cols = 1 + rng.below(dim_cap);
    const RationalMatrix a = random_rational_matrix(rng, rows, cols);
    const RationalVector b = random_rational_vector(rng, rows);
    const Matrix<double> a_f = convert<double>(a);
    Vector<double> b_f;
    for (const auto& v : b) {
      b_f.push_back(v.to_double());
    }
    const RationalVector atb = a.transpose() * b;
    Outcome out;
    for (unsigned d = 0; d <= degree_cap; ++d) {
      const RationalVector b_pow = kron_power(b, d);
      for (const MultiIndex& k : enumerate_fixed_degree(cols, d)) {
        const BigRational lhs = monomial(atb, k);
        const BigRational rhs = dot(colwise_kron_power(a, k), b_pow);
        auto inputs = [&] {
          return Json{{"suite", "kron"}, {"trial", trial},       {"k", to_json(k)},
                      {"A", to_json(a_f)},  {"b", to_json(b_f)}};
        };
        record_exact(out, lhs == rhs, exact_gap(lhs, rhs), inputs);
        record(out, kron_float_error(a_f, b_f, k), cfg.tol_rel, inputs);
      }
    }
    return out;
  });
  return reduce("kron", cfg.seed, cfg.tol_rel, outcomes);
}

VerifyReport verify_selector_orthonormality(unsigned n, unsigned total_degree) {
  if (n == 0 || n > 3 || total_degree > 4) {
    throw SizeError("selector orthonormality is checked for 1 <= n <= 3 and K <= 4");
  }
  const RationalMatrix identity = RationalMatrix::identity(n);
  const auto ks = enumerate_fixed_degree(n, total_degree);
  std::vector<RationalVector> columns;
  for (const auto& k : ks) {
    columns.push_back(colwise_kron_power(identity, k));
  }
  Outcome out;
  for (std::size_t a = 0; a < columns.size(); ++a) {
    for (std::size_t b = a; b < columns.size(); ++b) {
      const BigRational ip = dot(columns[a], columns[b]);
      const BigRational expected(a == b ? 1 : 0);
      record_exact(out, ip == expected, exact_gap(ip, expected), [&] {
        return Json{{"suite", "selector"}, {"n", n}, {"K", total_degree}, {"k_a", to_json(ks[a])},
                    {"k_b", to_json(ks[b])}, {"inner_product", ip.str()}};
      });
    }
  }
  VerifyReport report = reduce("selector", 0, 0.0, {out});
  return report;
}

VerifyReport verify_selector_suite(const TrialConfig& cfg) {
  VerifyReport merged;
  merged.suite = "selector";
  merged.seed = cfg.seed;
  for (unsigned n = 1; n <= std::min(cfg.n_max, 3U); ++n) {
    for (unsigned degree = 0; degree <= std::min(cfg.k_max, 4U); ++degree) {
      const VerifyReport part = verify_selector_orthonormality(n, degree);
      merged.checks_run += part.checks_run;
      merged.failures += part.failures;
      if (merged.worst_case.is_null() && !part.worst_case.is_null()) {
        merged.max_rel_err = part.max_rel_err;
        merged.worst_case = part.worst_case;
      }
    }
  }
  return merged;
}

VerifyReport verify_univariate_closed_forms(const TrialConfig& cfg) {
  const std::vector<StandardFamily> families{Probabilists{}, Physicists{}};
  auto outcomes = run_jobs(cfg.trials, cfg.threads, [&](std::size_t trial) {
    SplitMix64 rng = SplitMix64::stream(cfg.seed, trial);
    Outcome out;

    // Floating-point identity He_k(lambda x) = sum_i c_i He_{k-2i}(x).
    const double lambda = rng.uniform(cfg.entry_lo, cfg.entry_hi);
    const unsigned k = static_cast<unsigned>(rng.below(cfg.k_max + 1));
    const double x = rng.uniform(-3.0, 3.0);
    for (const auto& family : families) {
      record(out, univariate_error(family, k, lambda, x), cfg.tol_rel, [&] {
        return Json{{"suite", "univariate"}, {"trial", trial},  {"family", family_name(family)},
                    {"k", k},                {"lambda", lambda}, {"x", x}};
      });
    }

    // Exact agreement between the specialized and general coefficient routes.
    const BigRational lambda_q = random_rational(rng);
    const unsigned k_exact = static_cast<unsigned>(rng.below(std::min(cfg.k_max, kMaxTupleDegree) + 1));
    const RationalMatrix lambda_matrix{{lambda_q}};
    for (const auto& family : families) {
      const bool prob = std::holds_alternative<Probabilists>(family);
      const BigRational variance = prob ? BigRational(1) : BigRational(1, 2);
      const auto cov = SpdMatrix<BigRational>::isotropic(1, variance);
      for (unsigned i = 0; 2 * i <= k_exact; ++i) {
        const MultiIndex kk{k_exact};
        const MultiIndex q{k_exact - 2 * i};
        const BigRational uni = coeff_univariate(k_exact, i, lambda_q, family);
        const BigRational vec = prob ? coeff_vec_prob(k_exact, q, RationalVector{lambda_q})
                                     : coeff_vec_phys(k_exact, q, RationalVector{lambda_q});
        const BigRational gen = coeff_general(kk, q, lambda_matrix, cov, cov, CoeffVariant::Symmetrized);
        const BigRational lit = coeff_general(kk, q, lambda_matrix, cov, cov, CoeffVariant::PaperLiteral);
        const BigRational iso = coeff_isotropic(kk, q, lambda_matrix, variance);
        const bool equal = uni == vec && vec == gen && gen == lit && lit == iso;
        record_exact(out, equal, exact_gap(uni, gen), [&] {
          return Json{{"suite", "univariate-exact"}, {"trial", trial}, {"family", family_name(family)},
                      {"k", k_exact}, {"i", i}, {"lambda", lambda_q.str()}};
        });
      }

      // Inner-product coefficients against the general engine at n = 1.
      const std::size_t m = 1 + rng.below(cfg.m_max);
      const unsigned k_vec = static_cast<unsigned>(rng.below(std::min(cfg.k_max, 8U) + 1));
      const RationalVector lambda_vec = random_rational_vector(rng, m);
      const RationalMatrix lambda_col = RationalMatrix::column(lambda_vec);
      const auto cov_m = SpdMatrix<BigRational>::isotropic(m, variance);
      for (unsigned d : q_support(k_vec)) {
        for (const MultiIndex& q : enumerate_fixed_degree(m, d)) {
          const MultiIndex kk{k_vec};
          const BigRational vec = prob ? coeff_vec_prob(k_vec, q, lambda_vec) : coeff_vec_phys(k_vec, q, lambda_vec);
          const BigRational gen = coeff_general(kk, q, lambda_col, cov, cov_m, CoeffVariant::Symmetrized);
          const BigRational lit = coeff_general(kk, q, lambda_col, cov, cov_m, CoeffVariant::PaperLiteral);
          record_exact(out, vec == gen && gen == lit, exact_gap(vec, gen), [&] {
            return Json{{"suite", "univariate-exact"}, {"trial", trial},         {"family", family_name(family)},
                        {"k", k_vec},                  {"q", to_json(q)},        {"lambda", to_json(lambda_vec)}};
          });
        }
      }
    }
    return out;
  });
  return reduce("univariate", cfg.seed, cfg.tol_rel, outcomes);
}

VerifyReport verify_inner_product_identity(const TrialConfig& cfg) {
  const std::vector<StandardFamily> families{Probabilists{}, Physicists{}};
  auto outcomes = run_jobs(cfg.trials, cfg.threads, [&](std::size_t trial) {
    SplitMix64 rng = SplitMix64::stream(cfg.seed, trial);
    const std::size_t m = 1 + rng.below(cfg.m_max);
    const unsigned k = static_cast<unsigned>(rng.below(cfg.k_max + 1));
    const Vector<double> lambda = random_vector(rng, m, cfg.entry_lo, cfg.entry_hi);
    const Vector<double> x = random_vector(rng, m, cfg.entry_lo, cfg.entry_hi);
    Outcome out;
    for (const auto& family : families) {
      record(out, inner_product_error(family, k, lambda, x), cfg.tol_rel, [&] {
        return Json{{"suite", "inner"}, {"trial", trial},           {"family", family_name(family)},
                    {"k", k},           {"lambda", to_json(lambda)}, {"x", to_json(x)}};
      });
    }
    return out;
  });
  return reduce("inner", cfg.seed, cfg.tol_rel, outcomes);
}

VerifyReport verify_oracle_equivalence(const TrialConfig& cfg, CoeffVariant variant) {
  struct Job {
    std::size_t n;
    std::size_t m;
    MultiIndex k;
  };
  std::vector<Job> jobs;
  for (std::size_t n = 1; n <= cfg.n_max; ++n) {
    for (std::size_t m = 1; m <= cfg.m_max; ++m) {
      for (unsigned d = 0; d <= cfg.k_max; ++d) {
        for (const MultiIndex& k : enumerate_fixed_degree(n, d)) {
          for (unsigned inst = 0; inst < cfg.trials; ++inst) {
            jobs.push_back(Job{n, m, k});
          }
        }
      }
    }
  }
  auto outcomes = run_jobs(jobs.size(), cfg.threads, [&](std::size_t index) {
    const Job& job = jobs[index];
    SplitMix64 rng = SplitMix64::stream(cfg.seed, index);
    const RationalMatrix lambda = random_rational_matrix(rng, job.m, job.n);
    const RationalMatrix sigma = random_rational_spd(rng, job.n);
    const RationalMatrix upsilon = random_rational_spd(rng, job.m);
    const OracleResult result = oracle_compare(job.k, lambda, sigma, upsilon, variant);
    Outcome out;
    record_exact(out, result.equal, 1.0, [&] {
      return Json{{"suite", "oracle"},         {"job", index},           {"k", to_json(job.k)},
                  {"Lambda", to_json(lambda)}, {"Sigma", to_json(sigma)}, {"Upsilon", to_json(upsilon)},
                  {"variant", variant_name(variant)}, {"diff", to_json(result.diff)}};
    });
    return out;
  });
  return reduce("oracle", cfg.seed, 0.0, outcomes);
}

VerifyReport verify_recurrence_vs_symbolic(const TrialConfig& cfg) {
  std::vector<MultiIndex> jobs;
  for (std::size_t n = 1; n <= cfg.n_max; ++n) {
    for (unsigned d = 0; d <= cfg.k_max; ++d) {
      for (const MultiIndex& k : enumerate_fixed_degree(n, d)) {
        for (unsigned inst = 0; inst < cfg.trials; ++inst) {
          jobs.push_back(k);
        }
      }
    }
  }
  auto outcomes = run_jobs(jobs.size(), cfg.threads, [&](std::size_t index) {
    const MultiIndex& k = jobs[index];
    SplitMix64 rng = SplitMix64::stream(cfg.seed, index);
    const auto sigma = SpdMatrix<BigRational>::factorize(random_rational_spd(rng, k.arity()));
    const MPoly symbolic = hermite_symbolic(k, sigma.inverse());
    Outcome out;
    for (unsigned p = 0; p < cfg.points; ++p) {
      const RationalVector x = random_rational_vector(rng, k.arity());
      const BigRational by_recurrence = hermite_multi(k, x, sigma);
      const BigRational by_symbolic = symbolic.evaluate(x);
      record_exact(out, by_recurrence == by_symbolic, exact_gap(by_recurrence, by_symbolic), [&] {
        return Json{{"suite", "recurrence"}, {"job", index},
                    {"k", to_json(k)},       {"Sigma", to_json(sigma.matrix())},
                    {"x", to_json(x)},       {"recurrence", by_recurrence.str()},
                    {"symbolic", by_symbolic.str()}};
      });
    }
    return out;
  });
  return reduce("recurrence", cfg.seed, 0.0, outcomes);
}

double replay_worst_case(const Json& worst) {
  if (!worst.is_object() || !worst.contains("suite")) {
    throw ParseError("worst case record has no suite");
  }
  const std::string suite = worst.at("suite").get<std::string>();
  if (suite == "main") {
    return main_identity_error(multiindex_from_json(worst.at("k")), matrix_from_json(worst.at("Lambda")),
                               matrix_from_json(worst.at("Sigma")), matrix_from_json(worst.at("Upsilon")),
                               vector_from_json(worst.at("x")),
                               variant_from_name(worst.at("variant").get<std::string>()));
  }
  if (suite == "gf") {
    return gf_error(vector_from_json(worst.at("t")), vector_from_json(worst.at("x")),
                    matrix_from_json(worst.at("Sigma")));
  }
  if (suite == "kron") {
    return kron_float_error(matrix_from_json(worst.at("A")), vector_from_json(worst.at("b")),
                            multiindex_from_json(worst.at("k")));
  }
  if (suite == "univariate") {
    return univariate_error(family_from_name(worst.at("family").get<std::string>()), worst.at("k").get<unsigned>(),
                            worst.at("lambda").get<double>(), worst.at("x").get<double>());
  }
  if (suite == "inner") {
    return inner_product_error(family_from_name(worst.at("family").get<std::string>()),
                               worst.at("k").get<unsigned>(), vector_from_json(worst.at("lambda")),
                               vector_from_json(worst.at("x")));
  }
  throw DomainError("no floating-point replay for suite '" + suite + "'");
}

TrialConfig default_config(std::string_view suite) {
  TrialConfig cfg;
  if (suite == "main") {
    return cfg;
  }
  if (suite == "gf") {
    cfg.tol_rel = 1e-10;
  } else if (suite == "kron") {
    cfg.trials = 50;
    cfg.n_max = 4;
    cfg.k_max = 4;
    cfg.tol_rel = 1e-12;
  } else if (suite == "selector") {
    cfg.k_max = 4;
    cfg.tol_rel = 0.0;
  } else if (suite == "univariate") {
    cfg.k_max = 12;
    cfg.tol_rel = 1e-9;
  } else if (suite == "inner") {
    cfg.trials = 200;
    cfg.m_max = 5;
    cfg.k_max = 8;
    cfg.tol_rel = 1e-8;
  } else if (suite == "oracle") {
    cfg.trials = 20;
    cfg.k_max = 4;
    cfg.tol_rel = 0.0;
  } else if (suite == "recurrence") {
    cfg.trials = 1;
    cfg.k_max = 5;
    cfg.points = 50;
    cfg.tol_rel = 0.0;
  } else {
    throw ParseError("unknown verification suite '" + std::string(suite) + "'");
  }
  return cfg;
}

}  // namespace hermult
