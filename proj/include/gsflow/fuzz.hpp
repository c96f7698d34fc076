#pragma once

#include <map>
#include <optional>
#include <string>

#include "gsflow/gen.hpp"

namespace gsflow {

/// One randomized trial suite: generate a valuation, then assert the
/// demand-flow statements that must hold for it. For the GS-by-construction
/// families every assertion is unconditional; for monotone-random the
/// flow assertions apply only when the exchange-condition check passes.
struct FuzzConfig {
  int item_count = 6;
  int trials = 100;
  ValuationFamily family = ValuationFamily::oxs;
  std::uint64_t seed = 1;
  std::int64_t value_min = 0, value_max = 100;
  std::int64_t price_min = 0, price_max = 100;
  int price_pairs = 3;       // sampled (p, q) pairs per trial
  int shift_samples = 2;     // sampled uniform shifts per trial, both signs
  int endowment_samples = 4; // sampled endowments Z per trial
};

struct FuzzFailure {
  std::string assertion;  // which statement failed
  std::string detail;     // reproduction recipe: seeds, prices, valuation
  int trial = -1;
  std::uint64_t valuation_seed = 0;
};

struct FuzzReport {
  FuzzConfig config;
  int trials_run = 0;
  int mnat_pass = 0;  // valuations that passed the exchange condition
  std::map<std::string, long> checks;  // assertion name -> times checked
  std::optional<FuzzFailure> failure;
  bool ok() const { return !failure.has_value(); }
};

FuzzReport run_fuzz(const FuzzConfig& cfg);

/// Exchange-condition preservation suite: for each generated valuation
/// (families rotate, so the corpus mixes GS and non-GS), the verdict and
/// witness of the M♮ check must be identical on u and on u_p for every
/// sampled p, and when u passes, every endowment's marginal valuation must
/// pass as well.
struct PreservationConfig {
  int valuations = 200;
  int prices_per_valuation = 5;
  bool all_endowments = true;  // otherwise endowments are sampled
  int item_count_min = 3, item_count_max = 6;
  std::uint64_t seed = 7;
  std::int64_t value_min = 0, value_max = 100;
  std::int64_t price_min = 0, price_max = 100;
};

struct PreservationReport {
  int valuations_run = 0;
  int gs_count = 0, non_gs_count = 0;
  long net_checks = 0, marginal_checks = 0;
  std::optional<FuzzFailure> failure;
  bool ok() const { return !failure.has_value(); }
};

PreservationReport run_preservation(const PreservationConfig& cfg);

/// Cross-validation of the finite exchange check against the price-space
/// definition: for monotone-random valuations that fail the exchange
/// condition, a bounded randomized search must exhibit a direct GS
/// violation for most of them. Searches that exhaust the budget are
/// recorded as inconclusive, never as passes.
struct CrossValidationConfig {
  int target_valuations = 50;
  int item_count = 5;
  int samples_per_valuation = 10000;
  std::uint64_t seed = 11;
  std::int64_t value_min = 0, value_max = 100;
};

struct CrossValidationReport {
  int examined = 0;      // non-M♮ valuations examined
  int found = 0;         // direct violations certified
  int inconclusive = 0;  // budget exhausted without a certificate
  std::vector<std::uint64_t> inconclusive_seeds;
  int generated = 0;  // total valuations drawn, including M♮ ones skipped
};

CrossValidationReport run_cross_validation(const CrossValidationConfig& cfg);

}  // namespace gsflow
