#include <doctest.h>

#include <string>

#include "hermult/errors.hpp"
#include "hermult/rng.hpp"
#include "hermult/verify.hpp"

using namespace hermult;

namespace {

void check_replay(const VerifyReport& report) {
  REQUIRE(report.worst_case.is_object());
  const double replayed = replay_worst_case(report.worst_case);
  CHECK(replayed <= 2.0 * report.max_rel_err);
  CHECK(2.0 * replayed >= report.max_rel_err);
}

TrialConfig with_threads(TrialConfig cfg, unsigned threads) {
  cfg.threads = threads;
  return cfg;
}

}  // namespace

TEST_CASE("splitmix64 reference output") {
  SplitMix64 rng(0);
  CHECK(rng.next() == 0xE220A8397B1DCDAFULL);
  CHECK(rng.next() == 0x6E789E6AA1B965F4ULL);
  SplitMix64 a = SplitMix64::stream(7, 3), b = SplitMix64::stream(7, 3), c = SplitMix64::stream(7, 4);
  const auto av = a.next();
  CHECK(av == b.next());
  CHECK(av != c.next());
  for (int i = 0; i < 1000; ++i) {
    const double u = a.uniform(-2.0, 2.0);
    CHECK(u >= -2.0);
    CHECK(u < 2.0);
    const auto v = a.between(-3, 3);
    CHECK(v >= -3);
    CHECK(v <= 3);
  }
}

TEST_CASE("main identity") {
  const auto report = verify_main_identity(default_config("main"));
  CHECK(report.checks_run == 100);
  CHECK(report.failures == 0);
  CHECK(report.max_rel_err <= 1e-8);
  CHECK(report.rng == "splitmix64");
  CHECK(report.seed == 7);
  check_replay(report);

  const auto literal = verify_main_identity(default_config("main"), CoeffVariant::PaperLiteral);
  CHECK(literal.failures > 0);
  check_replay(literal);

  TrialConfig scalar = default_config("main");
  scalar.n_max = 1;
  scalar.m_max = 1;
  CHECK(verify_main_identity(scalar).failures == 0);
  CHECK(verify_main_identity(scalar, CoeffVariant::PaperLiteral).failures == 0);

  // Restricting only the input dimension is enough for the variants to agree.
  TrialConfig n1 = default_config("main");
  n1.n_max = 1;
  CHECK(verify_main_identity(n1, CoeffVariant::PaperLiteral).failures == 0);
}

TEST_CASE("generating function suite") {
  const auto report = verify_generating_function(default_config("gf"));
  CHECK(report.checks_run == 100);
  CHECK(report.failures == 0);
  CHECK(report.max_rel_err <= 1e-10);
  check_replay(report);

  TrialConfig one = default_config("gf");
  one.n_max = 1;
  one.trials = 37;
  const auto small = verify_generating_function(one);
  CHECK(small.checks_run == 37);
  CHECK(small.max_rel_err <= 1e-10);
}

TEST_CASE("kron suite") {
  const auto report = verify_kron_identity(default_config("kron"));
  CHECK(report.checks_run > 0);
  CHECK(report.failures == 0);
  CHECK(report.max_rel_err <= 1e-12);
  check_replay(report);
}

TEST_CASE("selector orthonormality") {
  const auto n1 = verify_selector_orthonormality(1, 4);
  CHECK(n1.checks_run == 1);
  CHECK(n1.failures == 0);
  const auto n2 = verify_selector_orthonormality(2, 2);
  // Unordered pairs of the three columns, diagonal included.
  CHECK(n2.checks_run == 6);
  CHECK(n2.failures == 0);
  CHECK(verify_selector_orthonormality(2, 1).checks_run == 3);
  CHECK(verify_selector_suite(default_config("selector")).failures == 0);
  CHECK_THROWS_AS(verify_selector_orthonormality(4, 2), SizeError);
  CHECK_THROWS_AS(verify_selector_orthonormality(2, 5), SizeError);
}

TEST_CASE("univariate and inner-product suites") {
  const auto uni = verify_univariate_closed_forms(default_config("univariate"));
  CHECK(uni.failures == 0);
  CHECK(uni.max_rel_err <= 1e-9);
  check_replay(uni);

  const auto inner = verify_inner_product_identity(default_config("inner"));
  CHECK(inner.failures == 0);
  CHECK(inner.max_rel_err <= 1e-8);
  check_replay(inner);
}

TEST_CASE("exact suites") {
  TrialConfig oracle = default_config("oracle");
  oracle.trials = 2;
  oracle.k_max = 3;
  const auto sym = verify_oracle_equivalence(oracle);
  CHECK(sym.checks_run > 0);
  CHECK(sym.failures == 0);
  CHECK(sym.max_rel_err == 0.0);
  CHECK(sym.worst_case.is_null());
  const auto literal = verify_oracle_equivalence(oracle, CoeffVariant::PaperLiteral);
  CHECK(literal.failures > 0);
  CHECK(literal.worst_case.at("suite") == "oracle");
  CHECK_THROWS_AS(replay_worst_case(literal.worst_case), DomainError);
  oracle.n_max = 1;
  CHECK(verify_oracle_equivalence(oracle, CoeffVariant::PaperLiteral).failures == 0);

  TrialConfig rec = default_config("recurrence");
  rec.points = 5;
  const auto recurrence = verify_recurrence_vs_symbolic(rec);
  CHECK(recurrence.checks_run > 0);
  CHECK(recurrence.failures == 0);
  CHECK(recurrence.worst_case.is_null());
}

TEST_CASE("reports do not depend on thread count") {
  const TrialConfig main_cfg = default_config("main");
  CHECK(dump_json(to_json(verify_main_identity(with_threads(main_cfg, 1)))) ==
        dump_json(to_json(verify_main_identity(with_threads(main_cfg, 4)))));
  const TrialConfig inner_cfg = default_config("inner");
  CHECK(dump_json(to_json(verify_inner_product_identity(with_threads(inner_cfg, 1)))) ==
        dump_json(to_json(verify_inner_product_identity(with_threads(inner_cfg, 3)))));
  TrialConfig oracle_cfg = default_config("oracle");
  oracle_cfg.trials = 2;
  oracle_cfg.k_max = 3;
  CHECK(dump_json(to_json(verify_oracle_equivalence(with_threads(oracle_cfg, 1), CoeffVariant::PaperLiteral))) ==
        dump_json(to_json(verify_oracle_equivalence(with_threads(oracle_cfg, 4), CoeffVariant::PaperLiteral))));
  TrialConfig other = main_cfg;
  other.seed = 8;
  CHECK(dump_json(to_json(verify_main_identity(other))) != dump_json(to_json(verify_main_identity(main_cfg))));
}

TEST_CASE("report serialization") {
  const auto report = verify_generating_function(default_config("gf"));
  const Json j = to_json(report);
  for (const char* key : {"checks_run", "failures", "max_rel_err", "worst_case", "rng", "seed"}) {
    CHECK(j.contains(key));
  }
  CHECK(j.at("rng") == "splitmix64");
  CHECK(j.at("checks_run").get<std::uint64_t>() >= j.at("failures").get<std::uint64_t>());
  CHECK_THROWS_AS(replay_worst_case(Json::object()), ParseError);
}
