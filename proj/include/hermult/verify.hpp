#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "hermult/coeffs.hpp"
#include "hermult/io.hpp"
#include "hermult/rng.hpp"

namespace hermult {

/// Inputs for a randomized verification run.
///
/// Trial-based suites (main, gf, kron, univariate, inner) run `trials`
/// independent draws. Exhaustive suites (oracle, recurrence) walk every
/// dimension and multi-index up to the caps and draw `trials` instances for
/// each combination.
struct TrialConfig {
  std::uint64_t seed = 7;
  unsigned trials = 100;
  unsigned n_max = 3;
  unsigned m_max = 3;
  unsigned k_max = 5;
  double tol_rel = 1e-8;
  double entry_lo = -2.0;
  double entry_hi = 2.0;
  /// Evaluation points per instance (recurrence suite).
  unsigned points = 50;
  /// Worker threads; 0 picks the hardware concurrency. Never affects results.
  unsigned threads = 0;
};

struct VerifyReport {
  std::string suite;
  std::uint64_t checks_run = 0;
  std::uint64_t failures = 0;
  double max_rel_err = 0.0;
  double tolerance = 0.0;
  /// Replayable inputs of the worst check; null when nothing was recorded.
  Json worst_case;
  std::string rng{SplitMix64::kName};
  std::uint64_t seed = 0;

  [[nodiscard]] bool passed() const { return failures == 0; }
};

Json to_json(const VerifyReport& report);

/// H_k(Lambda^T x; Sigma) against the expansion in H_q(x; Upsilon), relative
/// to max(1, |LHS|, sum |T H_q|).
VerifyReport verify_main_identity(const TrialConfig& cfg, CoeffVariant variant = CoeffVariant::Symmetrized);

/// Degree-10 partial sums of the generating series against the closed form
/// for |t| <= 0.1, |x| <= 1. The recorded error is absolute.
VerifyReport verify_generating_function(const TrialConfig& cfg);

/// (A^T b)^k against (A^{col k})^T b^{(x)|k|} for every |k| <= min(k_max, 4),
/// exactly over rationals and to tol_rel in doubles.
VerifyReport verify_kron_identity(const TrialConfig& cfg);

/// Pairwise inner products of {I_n^{col k} : |k| = K} are exactly 0 or 1.
VerifyReport verify_selector_orthonormality(unsigned n, unsigned total_degree);

/// verify_selector_orthonormality for every n <= min(n_max, 3) and
/// K <= min(k_max, 4), merged into one report.
VerifyReport verify_selector_suite(const TrialConfig& cfg);

/// He_k(lambda x) and H_k(lambda x) expansions for k <= 12, plus exact
/// agreement of the univariate, inner-product, isotropic and general
/// coefficient routines where they overlap.
VerifyReport verify_univariate_closed_forms(const TrialConfig& cfg);

/// He_k(lambda^T x) and H_k(lambda^T x) against the product-basis expansions,
/// m <= m_max, k <= k_max.
VerifyReport verify_inner_product_identity(const TrialConfig& cfg);

/// Exact oracle_compare over all (n, m) <= (n_max, m_max) and |k| <= k_max.
VerifyReport verify_oracle_equivalence(const TrialConfig& cfg, CoeffVariant variant = CoeffVariant::Symmetrized);

/// Exact agreement of the evaluation recurrence with symbolic differentiation
/// at `points` rational points, for all n <= n_max and |k| <= k_max.
VerifyReport verify_recurrence_vs_symbolic(const TrialConfig& cfg);

/// Recomputes the error of a recorded worst case (float suites only).
double replay_worst_case(const Json& worst_case);

/// Defaults for a named suite: main, gf, kron, selector, univariate, inner,
/// oracle, recurrence.
TrialConfig default_config(std::string_view suite);

/// Random SPD matrix Q^T Q + I with Q uniform on the entry range.
Matrix<double> random_spd(SplitMix64& rng, std::size_t n, double lo, double hi);

}  // namespace hermult
