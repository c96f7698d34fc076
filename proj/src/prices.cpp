#include "gsflow/prices.hpp"

namespace gsflow {

DeltaProfile delta_profile(const PriceVector& p, const PriceVector& q) {
  if (p.item_count() != q.item_count())
    throw std::invalid_argument("price vectors over different universes");
  DeltaProfile d;
  d.delta.reserve(p.prices.size());
  for (int i = 0; i < p.item_count(); ++i) d.delta.push_back(q[i] - p[i]);
  return d;
}

Rational bundle_price(const PriceVector& p, Bundle X) {
  Rational sum;
  for (int i : X.items()) sum += p[i];
  return sum;
}

Rational net_utility(const SetFunction& u, const PriceVector& p, Bundle X) {
  return u.value(X) - bundle_price(p, X);
}

SetFunction net_valuation(const SetFunction& u, const PriceVector& p) {
  if (p.item_count() != u.item_count())
    throw std::invalid_argument("price vector does not match the valuation universe");
  const int m = u.item_count();
  std::vector<Rational> table(bundle_count(m));
  // p(X) by dynamic programming over the lattice, then subtract
  for (std::uint32_t x = 1; x < bundle_count(m); ++x) {
    std::uint32_t low = x & (x - 1);
    int item = std::countr_zero(x);
    table[x] = table[low] + p[item];
  }
  for (std::uint32_t x = 0; x < bundle_count(m); ++x) {
    Bundle b = Bundle::from_mask(x);
    table[x] = u.value(b) - table[x];
  }
  return SetFunction(u.items(), std::move(table), u.label());
}

}  // namespace gsflow
