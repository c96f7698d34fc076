#include "gsflow/analysis.hpp"

#include "gsflow/flow.hpp"
#include "gsflow/rng.hpp"

namespace gsflow {

namespace {

// All candidate inequalities for a fixed (X, Y, X'), in witness order:
// Y' = ∅ first, then singletons of Y\X ascending.
std::vector<ExchangeCandidate> exchange_candidates(const std::vector<Rational>& tab,
                                                   std::uint32_t x, std::uint32_t y,
                                                   std::uint32_t xp) {
  const Rational rhs = tab[x] + tab[y];
  const std::uint32_t x_minus = x & ~xp;
  std::vector<ExchangeCandidate> out;
  out.push_back({Bundle(), tab[x_minus] + tab[y | xp], rhs});
  for (std::uint32_t rest = y & ~x; rest != 0; rest &= rest - 1) {
    std::uint32_t yp = rest & (0u - rest);
    out.push_back({Bundle::from_mask(yp), tab[x_minus | yp] + tab[(y & ~yp) | xp], rhs});
  }
  return out;
}

}  // namespace

std::optional<MViolationWitness> mnat_violation(const SetFunction& f) {
  const int m = f.item_count();
  const auto& tab = f.table();
  const std::uint32_t n = bundle_count(m);
  for (std::uint32_t x = 0; x < n; ++x) {
    for (std::uint32_t y = 0; y < n; ++y) {
      std::uint32_t only_x = x & ~y;
      if (only_x == 0) continue;
      const Rational rhs = tab[x] + tab[y];
      for (std::uint32_t rem = only_x; rem != 0; rem &= rem - 1) {
        const std::uint32_t xp = rem & (0u - rem);
        const std::uint32_t x_minus = x & ~xp;
        bool ok = tab[x_minus] + tab[y | xp] >= rhs;
        for (std::uint32_t rest = y & ~x; !ok && rest != 0; rest &= rest - 1) {
          std::uint32_t yp = rest & (0u - rest);
          ok = tab[x_minus | yp] + tab[(y & ~yp) | xp] >= rhs;
        }
        if (!ok)
          return MViolationWitness{Bundle::from_mask(x), Bundle::from_mask(y),
                                   Bundle::from_mask(xp), exchange_candidates(tab, x, y, xp)};
      }
    }
  }
  return std::nullopt;
}

std::optional<int> gs_definition_violation(const SetFunction& u, const PriceVector& p,
                                           const PriceVector& q) {
  DeltaProfile delta = delta_profile(p, q);
  const Rational zero;
  for (int y = 0; y < delta.item_count(); ++y)
    if (delta[y] < zero)
      throw std::invalid_argument("gs check needs a non-negative delta on every item; item " +
                                  u.item_name(y) + " has delta " + delta[y].str());
  Bundle at_p = demand_set(u, p).demanded_items;
  Bundle at_q = demand_set(u, q).demanded_items;
  for (int x = 0; x < delta.item_count(); ++x)
    if (delta[x].is_zero() && at_p.contains(x) && !at_q.contains(x)) return x;
  return std::nullopt;
}

SizeMaximizers size_maximizers(const SetFunction& f, int size) {
  const int m = f.item_count();
  if (size < 0 || size > m)
    throw std::out_of_range("maximizer size " + std::to_string(size) + " outside 0.." +
                            std::to_string(m));
  SizeMaximizers result;
  result.size = size;
  for (std::uint32_t x = 0; x < bundle_count(m); ++x) {
    Bundle b = Bundle::from_mask(x);
    if (b.size() != size) continue;
    const Rational& v = f.value(b);
    if (result.bundles.empty() || v > result.optimum) {
      result.optimum = v;
      result.bundles.clear();
      result.bundles.push_back(b);
    } else if (v == result.optimum) {
      result.bundles.push_back(b);
    }
  }
  return result;
}

std::optional<TelescopicViolation> telescopic_violation(const SetFunction& f) {
  const int m = f.item_count();
  std::vector<SizeMaximizers> by_size;
  by_size.reserve(static_cast<std::size_t>(m) + 1);
  for (int i = 0; i <= m; ++i) by_size.push_back(size_maximizers(f, i));

  auto contained_in_some = [](Bundle b, const std::vector<Bundle>& sups) {
    for (Bundle s : sups)
      if (b.is_subset_of(s)) return true;
    return false;
  };
  auto contains_some = [](Bundle b, const std::vector<Bundle>& subs) {
    for (Bundle s : subs)
      if (s.is_subset_of(b)) return true;
    return false;
  };

  for (int i = 0; i <= m; ++i) {
    for (int j = i + 1; j <= m; ++j) {
      for (Bundle zi : by_size[static_cast<std::size_t>(i)].bundles)
        if (!contained_in_some(zi, by_size[static_cast<std::size_t>(j)].bundles))
          return TelescopicViolation{i, j, 'a', zi};
      for (Bundle zj : by_size[static_cast<std::size_t>(j)].bundles)
        if (!contains_some(zj, by_size[static_cast<std::size_t>(i)].bundles))
          return TelescopicViolation{i, j, 'b', zj};
    }
  }
  return std::nullopt;
}

GsSearchResult find_gs_definition_violation(const SetFunction& u, int max_samples,
                                            std::uint64_t seed) {
  GsSearchResult result;
  const int m = u.item_count();
  if (m < 2) {
    result.samples_used = 0;
    return result;  // a fixed-price item cannot exist alongside a raised one
  }

  // price scale: the largest integer ceiling of any table value, at least 1
  std::int64_t scale = 1;
  for (const Rational& v : u.table()) {
    std::int64_t c = v.num() / v.den() + 1;
    if (c > scale) scale = c;
  }

  Rng rng(seed);
  for (int s = 0; s < max_samples; ++s) {
    PriceVector p;
    p.prices.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) p.prices.push_back(Rational(rng.uniform(0, scale)));
    ++result.samples_used;

    Bundle demanded = demand_set(u, p).demanded_items;
    if (demanded.empty()) continue;
    auto items = demanded.items();
    int x = items[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(items.size()) - 1))];

    // raise a random nonempty subset of the other items
    PriceVector q = p;
    bool raised = false;
    for (int i = 0; i < m; ++i) {
      if (i == x) continue;
      if (rng.uniform(0, 1) == 1) {
        q[i] += Rational(rng.uniform(1, scale));
        raised = true;
      }
    }
    if (!raised) {
      int other = (x + 1 + static_cast<int>(rng.uniform(0, m - 2))) % m;
      q[other] += Rational(rng.uniform(1, scale));
    }

    if (!demand_set(u, q).demanded_items.contains(x)) {
      result.found = true;
      result.p = std::move(p);
      result.q = std::move(q);
      result.item = x;
      return result;
    }
  }
  return result;
}

}  // namespace gsflow
