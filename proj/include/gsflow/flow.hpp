#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gsflow/prices.hpp"

namespace gsflow {

/// All net-utility-maximizing bundles at a price vector, in mask order.
struct DemandResult {
  std::vector<Bundle> demands;
  Rational optimum;
  /// Union of all demands: the set of p-demanded items.
  Bundle demanded_items;
};

/// Exhaustive scan of all 2^m bundles; ties are never broken.
DemandResult demand_set(const SetFunction& u, const PriceVector& p);

/// Items demanded at p but not at q.
Bundle abandoned_items(const SetFunction& u, const PriceVector& p, const PriceVector& q);
/// Items demanded at q but not at p.
Bundle discovered_items(const SetFunction& u, const PriceVector& p, const PriceVector& q);

struct DdfViolation {
  int item;
  char clause;  // 'a' or 'b'
  std::string explanation;
};

/// Downward-demand-flow verdict for a price pair. Clause (a): an abandoned
/// item x with Δx ≤ 0 requires a discovered y with Δy < Δx. Clause (b): a
/// discovered item x with Δx ≥ 0 requires an abandoned y with Δy > Δx.
/// Both clauses are evaluated independently for every item; violations are
/// listed in item-index order.
struct FlowVerdict {
  DeltaProfile delta;
  Bundle abandoned;
  Bundle discovered;
  bool ddf_pass = true;
  std::vector<DdfViolation> violations;
};

FlowVerdict check_ddf(const SetFunction& u, const PriceVector& p, const PriceVector& q);

/// Uniform-shift result. With p' = p + d per item: for d ≤ 0 every p-demand
/// must be contained in some p'-demand; for d ≥ 0 every p'-demand must be
/// contained in some p-demand; d = 0 checks both. A violation carries the
/// first demand (mask order) with no qualifying superset.
struct UniformShiftViolation {
  Bundle demand;
  /// True when the uncovered demand came from the shifted prices p'.
  bool from_shifted;
};

std::optional<UniformShiftViolation> uniform_shift_violation(const SetFunction& u,
                                                             const PriceVector& p,
                                                             const Rational& d);

/// Intermediate price vectors p' and q' for the staged walk from p to q
/// pivoted on item x: p'_y = p_y + Δx for all y, and q'_y = p'_y where
/// Δy ≤ Δx, q'_y = q_y where Δy ≥ Δx.
struct StagedPrices {
  PriceVector p_prime;
  PriceVector q_prime;
};

StagedPrices decompose_price_change(const PriceVector& p, const PriceVector& q, int item);

/// Diagnostic trace of the staged walk p -> p' -> q' -> q for a pivot item.
/// Each stage states a containment over demanded-item sets that holds for
/// every M♮-concave valuation:
///   1. uniform shift: demanded(p) ⊆ demanded(p') when Δx ≤ 0, and
///      demanded(p') ⊆ demanded(p) when Δx ≥ 0;
///   2. p' -> q' raises only prices with Δy > Δx: demanded items with
///      Δy ≤ Δx survive;
///   3. q -> q' raises only prices with Δy < Δx: demanded items with
///      Δy ≥ Δx survive.
struct DdfTraceStage {
  std::string description;
  bool holds = true;
};

struct DdfTrace {
  StagedPrices staged;
  Bundle demanded_p, demanded_p_prime, demanded_q_prime, demanded_q;
  DdfTraceStage stages[3];
  bool all_hold() const { return stages[0].holds && stages[1].holds && stages[2].holds; }
};

DdfTrace trace_ddf(const SetFunction& u, const PriceVector& p, const PriceVector& q, int item);

/// One revealed-preference data point: the bundle an agent chose at prices.
struct Observation {
  PriceVector prices;
  Bundle chosen;
};

/// The audit treats each observed choice as the unique demand at its prices
/// (holds with probability 1 under generic prices). This wording is attached
/// to every certificate.
inline constexpr const char* kAuditAssumption =
    "each observed bundle is treated as the unique demand at its prices";

/// Certificate that no gross-substitute valuation rationalizes the data:
/// the first ordered observation pair whose implied demand flow violates a
/// DDF clause.
struct AuditCertificate {
  std::size_t first_obs, second_obs;
  DeltaProfile delta;
  DdfViolation violation;
};

std::optional<AuditCertificate> audit_observations(const std::vector<std::string>& items,
                                                   const std::vector<Observation>& observations);

}  // namespace gsflow
