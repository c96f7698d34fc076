#pragma once

#include <vector>

#include "gsflow/valuation.hpp"

namespace gsflow {

/// Per-item exact prices, indexed in universe order. Prices may be negative;
/// nothing here restricts sign.
struct PriceVector {
  std::vector<Rational> prices;

  PriceVector() = default;
  explicit PriceVector(std::vector<Rational> p) : prices(std::move(p)) {}

  int item_count() const { return static_cast<int>(prices.size()); }
  const Rational& operator[](int i) const { return prices[static_cast<std::size_t>(i)]; }
  Rational& operator[](int i) { return prices[static_cast<std::size_t>(i)]; }

  /// p + d on every item.
  PriceVector shifted(const Rational& d) const {
    PriceVector out(prices);
    for (auto& x : out.prices) x += d;
    return out;
  }

  friend bool operator==(const PriceVector& a, const PriceVector& b) = default;
};

/// Per-item price increase Δx = q_x - p_x for a generating pair (p, q).
struct DeltaProfile {
  std::vector<Rational> delta;

  int item_count() const { return static_cast<int>(delta.size()); }
  const Rational& operator[](int i) const { return delta[static_cast<std::size_t>(i)]; }
};

DeltaProfile delta_profile(const PriceVector& p, const PriceVector& q);

/// p(X) = sum of member prices (0 for the empty bundle).
Rational bundle_price(const PriceVector& p, Bundle X);

/// u_p(X) = u(X) - p(X).
Rational net_utility(const SetFunction& u, const PriceVector& p, Bundle X);

/// The net-utility function u_p as a first-class table. The result is a
/// plain SetFunction: net utilities need not be monotone.
SetFunction net_valuation(const SetFunction& u, const PriceVector& p);

}  // namespace gsflow
