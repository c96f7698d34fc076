#include "gsflow/flow.hpp"

#include <sstream>

namespace gsflow {

DemandResult demand_set(const SetFunction& u, const PriceVector& p) {
  if (p.item_count() != u.item_count())
    throw std::invalid_argument("price vector does not match the valuation universe");
  const int m = u.item_count();
  // bundle prices share the p(X) = p(X minus lowest bit) + p_item recurrence
  std::vector<Rational> price(bundle_count(m));
  for (std::uint32_t x = 1; x < bundle_count(m); ++x)
    price[x] = price[x & (x - 1)] + p[std::countr_zero(x)];

  DemandResult result;
  result.optimum = u.value(Bundle()) - price[0];
  result.demands.push_back(Bundle());
  for (std::uint32_t x = 1; x < bundle_count(m); ++x) {
    Bundle b = Bundle::from_mask(x);
    Rational net = u.value(b) - price[x];
    if (net > result.optimum) {
      result.optimum = net;
      result.demands.clear();
      result.demands.push_back(b);
    } else if (net == result.optimum) {
      result.demands.push_back(b);
    }
  }
  for (Bundle b : result.demands) result.demanded_items = result.demanded_items | b;
  return result;
}

Bundle abandoned_items(const SetFunction& u, const PriceVector& p, const PriceVector& q) {
  return demand_set(u, p).demanded_items - demand_set(u, q).demanded_items;
}

Bundle discovered_items(const SetFunction& u, const PriceVector& p, const PriceVector& q) {
  return demand_set(u, q).demanded_items - demand_set(u, p).demanded_items;
}

namespace {

void evaluate_ddf_clauses(const std::vector<std::string>& item_names, const DeltaProfile& delta,
                          Bundle abandoned, Bundle discovered, FlowVerdict& verdict) {
  const Rational zero;
  for (int x = 0; x < delta.item_count(); ++x) {
    if (abandoned.contains(x) && delta[x] <= zero) {
      bool matched = false;
      for (int y : discovered.items())
        if (delta[y] < delta[x]) {
          matched = true;
          break;
        }
      if (!matched) {
        std::ostringstream msg;
        msg << "abandoned item " << item_names[static_cast<std::size_t>(x)] << " has delta "
            << delta[x] << " <= 0 but no item with smaller delta was discovered";
        verdict.violations.push_back({x, 'a', msg.str()});
      }
    }
    if (discovered.contains(x) && delta[x] >= zero) {
      bool matched = false;
      for (int y : abandoned.items())
        if (delta[y] > delta[x]) {
          matched = true;
          break;
        }
      if (!matched) {
        std::ostringstream msg;
        msg << "discovered item " << item_names[static_cast<std::size_t>(x)] << " has delta "
            << delta[x] << " >= 0 but no item with larger delta was abandoned";
        verdict.violations.push_back({x, 'b', msg.str()});
      }
    }
  }
  verdict.ddf_pass = verdict.violations.empty();
}

}  // namespace

FlowVerdict check_ddf(const SetFunction& u, const PriceVector& p, const PriceVector& q) {
  FlowVerdict verdict;
  verdict.delta = delta_profile(p, q);
  Bundle at_p = demand_set(u, p).demanded_items;
  Bundle at_q = demand_set(u, q).demanded_items;
  verdict.abandoned = at_p - at_q;
  verdict.discovered = at_q - at_p;
  evaluate_ddf_clauses(u.items(), verdict.delta, verdict.abandoned, verdict.discovered, verdict);
  return verdict;
}

namespace {

// First bundle (mask order) in `inner` with no superset in `outer`.
std::optional<Bundle> uncovered_demand(const std::vector<Bundle>& inner,
                                       const std::vector<Bundle>& outer) {
  for (Bundle b : inner) {
    bool covered = false;
    for (Bundle sup : outer)
      if (b.is_subset_of(sup)) {
        covered = true;
        break;
      }
    if (!covered) return b;
  }
  return std::nullopt;
}

}  // namespace

std::optional<UniformShiftViolation> uniform_shift_violation(const SetFunction& u,
                                                             const PriceVector& p,
                                                             const Rational& d) {
  DemandResult at_p = demand_set(u, p);
  DemandResult at_shifted = demand_set(u, p.shifted(d));
  const Rational zero;
  if (d <= zero) {
    if (auto b = uncovered_demand(at_p.demands, at_shifted.demands))
      return UniformShiftViolation{*b, false};
  }
  if (d >= zero) {
    if (auto b = uncovered_demand(at_shifted.demands, at_p.demands))
      return UniformShiftViolation{*b, true};
  }
  return std::nullopt;
}

StagedPrices decompose_price_change(const PriceVector& p, const PriceVector& q, int item) {
  if (item < 0 || item >= p.item_count()) throw std::out_of_range("pivot item outside universe");
  DeltaProfile delta = delta_profile(p, q);
  const Rational& dx = delta[item];
  StagedPrices staged;
  staged.p_prime = p.shifted(dx);
  staged.q_prime = staged.p_prime;
  for (int y = 0; y < p.item_count(); ++y)
    if (delta[y] >= dx) staged.q_prime[y] = q[y];
  return staged;
}

DdfTrace trace_ddf(const SetFunction& u, const PriceVector& p, const PriceVector& q, int item) {
  DdfTrace trace;
  trace.staged = decompose_price_change(p, q, item);
  DeltaProfile delta = delta_profile(p, q);
  const Rational& dx = delta[item];
  const Rational zero;

  trace.demanded_p = demand_set(u, p).demanded_items;
  trace.demanded_p_prime = demand_set(u, trace.staged.p_prime).demanded_items;
  trace.demanded_q_prime = demand_set(u, trace.staged.q_prime).demanded_items;
  trace.demanded_q = demand_set(u, q).demanded_items;

  Bundle at_or_below;  // items y with Δy <= Δx
  Bundle at_or_above;  // items y with Δy >= Δx
  for (int y = 0; y < p.item_count(); ++y) {
    if (delta[y] <= dx) at_or_below = at_or_below.with(y);
    if (delta[y] >= dx) at_or_above = at_or_above.with(y);
  }

  auto& s1 = trace.stages[0];
  if (dx <= zero) s1.holds = trace.demanded_p.is_subset_of(trace.demanded_p_prime);
  if (dx >= zero) s1.holds = s1.holds && trace.demanded_p_prime.is_subset_of(trace.demanded_p);
  s1.description = "uniform shift p -> p' by delta(" + u.item_name(item) + ") = " + dx.str() +
                   ": demanded items survive in the cheaper direction";

  auto& s2 = trace.stages[1];
  s2.holds = (trace.demanded_p_prime & at_or_below).is_subset_of(trace.demanded_q_prime);
  s2.description =
      "p' -> q' raises only prices with larger delta: demanded items at or below the pivot stay";

  auto& s3 = trace.stages[2];
  s3.holds = (trace.demanded_q & at_or_above).is_subset_of(trace.demanded_q_prime);
  s3.description =
      "q -> q' raises only prices with smaller delta: demanded items at or above the pivot stay";

  return trace;
}

std::optional<AuditCertificate> audit_observations(const std::vector<std::string>& items,
                                                   const std::vector<Observation>& observations) {
  const int m = static_cast<int>(items.size());
  for (const Observation& o : observations) {
    if (o.prices.item_count() != m)
      throw std::invalid_argument("observation prices do not match the universe");
    if (!o.chosen.is_subset_of(Bundle::full(m)))
      throw std::invalid_argument("observed bundle outside the universe");
  }
  for (std::size_t i = 0; i < observations.size(); ++i) {
    for (std::size_t j = 0; j < observations.size(); ++j) {
      if (i == j) continue;
      const Observation& from = observations[i];
      const Observation& to = observations[j];
      FlowVerdict verdict;
      verdict.delta = delta_profile(from.prices, to.prices);
      // genericity assumption: the chosen bundle stands in for the whole demand set
      verdict.abandoned = from.chosen - to.chosen;
      verdict.discovered = to.chosen - from.chosen;
      evaluate_ddf_clauses(items, verdict.delta, verdict.abandoned, verdict.discovered, verdict);
      if (!verdict.ddf_pass)
        return AuditCertificate{i, j, verdict.delta, verdict.violations.front()};
    }
  }
  return std::nullopt;
}

}  // namespace gsflow
