#include <doctest.h>

#include "gsflow/fuzz.hpp"

using namespace gsflow;

TEST_CASE("fuzz runs cleanly on GS families") {
  FuzzConfig cfg;
  cfg.item_count = 5;
  cfg.trials = 15;
  cfg.family = ValuationFamily::oxs;
  cfg.seed = 2;
  FuzzReport report = run_fuzz(cfg);
  CHECK(report.ok());
  CHECK(report.trials_run == 15);
  CHECK(report.mnat_pass == 15);
  CHECK(report.checks.at("ddf") == 45);
  CHECK(report.checks.at("telescopic") == 15);
  CHECK(report.checks.at("uniform-shift") == 30);
  CHECK(report.checks.at("marginal-preservation") == 60);
}

TEST_CASE("fuzz applies flow assertions only to exchange-condition passes") {
  FuzzConfig cfg;
  cfg.item_count = 4;
  cfg.trials = 30;
  cfg.family = ValuationFamily::monotone_random;
  cfg.seed = 3;
  FuzzReport report = run_fuzz(cfg);
  CHECK(report.ok());  // non-GS instances skip DDF, so no failure is possible
  CHECK(report.mnat_pass < 30);
  CHECK(report.checks.at("mnat") == 30);
  CHECK(report.checks.at("net-preservation") == 30);
  CHECK(report.checks.at("ddf") == 3 * report.mnat_pass);
}

TEST_CASE("zero trials produce an empty passing report") {
  FuzzConfig cfg;
  cfg.trials = 0;
  FuzzReport report = run_fuzz(cfg);
  CHECK(report.ok());
  CHECK(report.trials_run == 0);
  CHECK(report.checks.empty());
}

TEST_CASE("fuzz reports are deterministic in the seed") {
  FuzzConfig cfg;
  cfg.item_count = 4;
  cfg.trials = 10;
  cfg.family = ValuationFamily::unit_demand;
  cfg.seed = 99;
  FuzzReport a = run_fuzz(cfg);
  FuzzReport b = run_fuzz(cfg);
  CHECK(a.mnat_pass == b.mnat_pass);
  CHECK(a.checks == b.checks);
}

TEST_CASE("preservation suite mixes GS and non-GS valuations") {
  PreservationConfig cfg;
  cfg.valuations = 24;
  cfg.prices_per_valuation = 2;
  cfg.item_count_min = 3;
  cfg.item_count_max = 4;
  cfg.seed = 5;
  PreservationReport report = run_preservation(cfg);
  CHECK(report.ok());
  CHECK(report.valuations_run == 24);
  CHECK(report.gs_count >= 1);
  CHECK(report.non_gs_count >= 1);
  CHECK(report.net_checks == 48);
  CHECK(report.marginal_checks > 0);
}

TEST_CASE("cross-validation certifies most non-GS monotone-random draws") {
  CrossValidationConfig cfg;
  cfg.target_valuations = 8;
  cfg.item_count = 4;
  cfg.samples_per_valuation = 4000;
  cfg.seed = 12;
  CrossValidationReport report = run_cross_validation(cfg);
  CHECK(report.examined == 8);
  CHECK(report.found + report.inconclusive == 8);
  CHECK(report.found >= 7);
  CHECK(report.inconclusive_seeds.size() == static_cast<std::size_t>(report.inconclusive));
}
