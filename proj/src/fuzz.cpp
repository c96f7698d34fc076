#include "gsflow/fuzz.hpp"

#include <sstream>

#include "gsflow/analysis.hpp"
#include "gsflow/flow.hpp"
#include "gsflow/json_io.hpp"
#include "gsflow/rng.hpp"

namespace gsflow {

namespace {

std::string prices_str(const PriceVector& p) {
  std::string s = "(";
  for (int i = 0; i < p.item_count(); ++i) {
    if (i) s += ",";
    s += p[i].str();
  }
  return s + ")";
}

std::string repro(const Valuation& u, const std::string& extra) {
  std::ostringstream out;
  out << extra << "; valuation " << io::valuation_to_json(u).dump();
  return out.str();
}

bool same_witness(const std::optional<MViolationWitness>& a,
                  const std::optional<MViolationWitness>& b) {
  if (a.has_value() != b.has_value()) return false;
  if (!a) return true;
  return a->x_set == b->x_set && a->y_set == b->y_set && a->x_prime == b->x_prime;
}

}  // namespace

FuzzReport run_fuzz(const FuzzConfig& cfg) {
  FuzzReport report;
  report.config = cfg;
  const bool gs_family = cfg.family != ValuationFamily::monotone_random;

  for (int trial = 0; trial < cfg.trials; ++trial) {
    const std::uint64_t trial_seed = Rng::derive(cfg.seed, static_cast<std::uint64_t>(trial));
    auto sub_seed = [&](std::uint64_t k) { return Rng::derive(trial_seed, k); };

    GenConfig gen{cfg.item_count, sub_seed(0), cfg.family, cfg.value_min, cfg.value_max};
    Valuation u = gen_valuation(gen);
    auto fail = [&](std::string assertion, std::string detail) {
      report.failure = FuzzFailure{std::move(assertion),
                                   repro(u, "trial " + std::to_string(trial) + "; " + detail),
                                   trial, gen.seed};
    };

    auto mnat = mnat_violation(u);
    ++report.checks["mnat"];
    if (gs_family && mnat) {
      fail("family-soundness", std::string(family_name(cfg.family)) +
                                   " generator produced a non-M-natural valuation");
      return report;
    }
    const bool is_gs = !mnat.has_value();
    if (is_gs) ++report.mnat_pass;

    // exchange condition is price-independent: same verdict and witness on u_p
    PriceVector base = gen_prices(cfg.item_count, sub_seed(1), cfg.price_min, cfg.price_max);
    ++report.checks["net-preservation"];
    if (!same_witness(mnat, mnat_violation(net_valuation(u, base)))) {
      fail("net-preservation", "verdict differs on net valuation at p=" + prices_str(base));
      return report;
    }

    if (!is_gs) continue;  // flow statements below are guaranteed only under M♮

    ++report.checks["telescopic"];
    if (auto tv = telescopic_violation(u)) {
      fail("telescopic", "raw valuation violates the telescopic property at sizes " +
                             std::to_string(tv->small_size) + "," + std::to_string(tv->large_size));
      return report;
    }
    if (auto tv = telescopic_violation(net_valuation(u, base))) {
      fail("telescopic", "net valuation at p=" + prices_str(base) +
                             " violates the telescopic property at sizes " +
                             std::to_string(tv->small_size) + "," + std::to_string(tv->large_size));
      return report;
    }

    Rng shift_rng(sub_seed(2));
    for (int s = 0; s < cfg.shift_samples; ++s) {
      Rational d(shift_rng.uniform(0, cfg.price_max));
      if (s % 2 == 1) d = -d;
      ++report.checks["uniform-shift"];
      if (auto v = uniform_shift_violation(u, base, d)) {
        fail("uniform-shift", "shift d=" + d.str() + " at p=" + prices_str(base) +
                                  " left a demand with no superset demand");
        return report;
      }
    }

    Rng pivot_rng(sub_seed(3));
    for (int k = 0; k < cfg.price_pairs; ++k) {
      PriceVector p = gen_prices(cfg.item_count, sub_seed(10 + 2 * static_cast<std::uint64_t>(k)),
                                 cfg.price_min, cfg.price_max);
      PriceVector q = gen_prices(cfg.item_count, sub_seed(11 + 2 * static_cast<std::uint64_t>(k)),
                                 cfg.price_min, cfg.price_max);
      ++report.checks["ddf"];
      FlowVerdict verdict = check_ddf(u, p, q);
      if (!verdict.ddf_pass) {
        fail("ddf", "p=" + prices_str(p) + " q=" + prices_str(q) + " clause (" +
                        verdict.violations.front().clause + ") at item " +
                        u.item_name(verdict.violations.front().item));
        return report;
      }
      ++report.checks["ddf-staging"];
      int pivot = static_cast<int>(pivot_rng.uniform(0, cfg.item_count - 1));
      if (!trace_ddf(u, p, q, pivot).all_hold()) {
        fail("ddf-staging", "p=" + prices_str(p) + " q=" + prices_str(q) + " pivot " +
                                u.item_name(pivot) + ": a stage containment failed");
        return report;
      }
    }

    Rng endow_rng(sub_seed(4));
    for (int k = 0; k < cfg.endowment_samples; ++k) {
      Bundle z = Bundle::from_mask(static_cast<std::uint32_t>(
          endow_rng.uniform(0, static_cast<std::int64_t>(bundle_count(cfg.item_count)) - 1)));
      ++report.checks["marginal-preservation"];
      if (mnat_violation(marginal_valuation(u, z))) {
        fail("marginal-preservation",
             "endowment " + io::bundle_key(u.items(), z) + " has a non-M-natural marginal");
        return report;
      }
    }

    // a flow that satisfies clause (a) on an admissible pair must satisfy
    // the direct GS condition on that pair (checked for every family)
    PriceVector q = base;
    Rng raise_rng(sub_seed(5));
    int fixed = static_cast<int>(raise_rng.uniform(0, cfg.item_count - 1));
    for (int i = 0; i < cfg.item_count; ++i)
      if (i != fixed && raise_rng.coin()) q[i] += Rational(raise_rng.uniform(1, cfg.price_max));
    ++report.checks["ddf-implies-gs"];
    FlowVerdict admissible = check_ddf(u, base, q);
    bool clause_a_ok = true;
    for (const auto& v : admissible.violations)
      if (v.clause == 'a') clause_a_ok = false;
    if (clause_a_ok && gs_definition_violation(u, base, q).has_value()) {
      fail("ddf-implies-gs",
           "clause (a) passed but the GS definition failed on p=" + prices_str(base) +
               " q=" + prices_str(q));
      return report;
    }

    ++report.trials_run;
  }
  report.trials_run = cfg.trials;
  return report;
}

PreservationReport run_preservation(const PreservationConfig& cfg) {
  PreservationReport report;
  static constexpr ValuationFamily kRotation[] = {
      ValuationFamily::monotone_random, ValuationFamily::unit_demand,
      ValuationFamily::monotone_random, ValuationFamily::oxs,
      ValuationFamily::monotone_random, ValuationFamily::additive};

  for (int t = 0; t < cfg.valuations; ++t) {
    const std::uint64_t trial_seed = Rng::derive(cfg.seed, static_cast<std::uint64_t>(t));
    Rng pick(trial_seed);
    GenConfig gen;
    gen.item_count = static_cast<int>(
        pick.uniform(cfg.item_count_min, cfg.item_count_max));
    gen.seed = Rng::derive(trial_seed, 1);
    gen.family = kRotation[t % std::size(kRotation)];
    gen.value_min = cfg.value_min;
    gen.value_max = cfg.value_max;
    Valuation u = gen_valuation(gen);
    auto fail = [&](std::string assertion, std::string detail) {
      report.failure =
          FuzzFailure{std::move(assertion),
                      repro(u, "valuation " + std::to_string(t) + "; " + detail), t, gen.seed};
    };

    auto mnat = mnat_violation(u);
    const bool is_gs = !mnat.has_value();
    (is_gs ? report.gs_count : report.non_gs_count) += 1;

    for (int k = 0; k < cfg.prices_per_valuation; ++k) {
      PriceVector p = gen_prices(gen.item_count, Rng::derive(trial_seed, 10 + static_cast<std::uint64_t>(k)),
                                 cfg.price_min, cfg.price_max);
      ++report.net_checks;
      if (!same_witness(mnat, mnat_violation(net_valuation(u, p)))) {
        fail("net-preservation", "verdict differs on net valuation at p=" + prices_str(p));
        return report;
      }
    }

    if (is_gs) {
      Rng endow(Rng::derive(trial_seed, 99));
      const std::uint32_t all = bundle_count(gen.item_count);
      for (std::uint32_t z = 0; z < all; ++z) {
        std::uint32_t mask = cfg.all_endowments
                                 ? z
                                 : static_cast<std::uint32_t>(endow.uniform(0, all - 1));
        ++report.marginal_checks;
        if (mnat_violation(marginal_valuation(u, Bundle::from_mask(mask)))) {
          fail("marginal-preservation",
               "endowment " + io::bundle_key(u.items(), Bundle::from_mask(mask)) +
                   " has a non-M-natural marginal");
          return report;
        }
        if (!cfg.all_endowments && z >= 8) break;
      }
    }
    ++report.valuations_run;
  }
  return report;
}

CrossValidationReport run_cross_validation(const CrossValidationConfig& cfg) {
  CrossValidationReport report;
  for (std::uint64_t draw = 0; report.examined < cfg.target_valuations; ++draw) {
    GenConfig gen{cfg.item_count, Rng::derive(cfg.seed, draw), ValuationFamily::monotone_random,
                  cfg.value_min, cfg.value_max};
    Valuation u = gen_valuation(gen);
    ++report.generated;
    if (is_mnat_concave(u)) continue;  // cross-validation targets failures only

    ++report.examined;
    GsSearchResult search =
        find_gs_definition_violation(u, cfg.samples_per_valuation, Rng::derive(gen.seed, 1));
    if (search.found) {
      ++report.found;
    } else {
      ++report.inconclusive;
      report.inconclusive_seeds.push_back(gen.seed);
    }
  }
  return report;
}

}  // namespace gsflow
