#pragma once

// Test-side oracles, deliberately independent of the library's arithmetic
// and scan logic: all computation here runs on boost::multiprecision
// rationals with its own enumeration loops. Used to derive and re-derive
// expected values, never from the code under test.

#include <algorithm>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gsflow/prices.hpp"
#include "gsflow/valuation.hpp"

namespace oracle {

using BigRat = boost::multiprecision::cpp_rational;

inline BigRat big(const gsflow::Rational& r) { return BigRat(r.num(), r.den()); }

struct OracleDemand {
  std::vector<std::uint32_t> demands;  // mask order
  BigRat optimum;
  std::uint32_t demanded_items = 0;
};

inline OracleDemand demand(const gsflow::SetFunction& u, const gsflow::PriceVector& p) {
  const int m = u.item_count();
  OracleDemand out;
  bool first = true;
  for (std::uint32_t x = 0; x < (1u << m); ++x) {
    BigRat net = big(u.value(gsflow::Bundle::from_mask(x)));
    for (int i = 0; i < m; ++i)
      if ((x >> i) & 1u) net -= big(p[i]);
    if (first || net > out.optimum) {
      out.optimum = net;
      out.demands.clear();
      out.demands.push_back(x);
      first = false;
    } else if (net == out.optimum) {
      out.demands.push_back(x);
    }
  }
  for (auto x : out.demands) out.demanded_items |= x;
  return out;
}

struct OracleMnatWitness {
  std::uint32_t x, y, xp;
};

inline std::optional<OracleMnatWitness> mnat_violation(const gsflow::SetFunction& u) {
  const int m = u.item_count();
  auto val = [&](std::uint32_t mask) { return big(u.value(gsflow::Bundle::from_mask(mask))); };
  for (std::uint32_t x = 0; x < (1u << m); ++x) {
    for (std::uint32_t y = 0; y < (1u << m); ++y) {
      BigRat rhs = val(x) + val(y);
      for (int i = 0; i < m; ++i) {
        std::uint32_t xp = 1u << i;
        if (!(x & ~y & xp)) continue;
        bool ok = val(x & ~xp) + val(y | xp) >= rhs;
        for (int j = 0; !ok && j < m; ++j) {
          std::uint32_t yp = 1u << j;
          if (!(y & ~x & yp)) continue;
          ok = val((x & ~xp) | yp) + val((y & ~yp) | xp) >= rhs;
        }
        if (!ok) return OracleMnatWitness{x, y, xp};
      }
    }
  }
  return std::nullopt;
}

/// Max-weight matching of the bundle's items to slots by literal recursive
/// enumeration of assignments (every item either unmatched or matched to a
/// free slot). Exponential; test sizes only.
inline BigRat max_matching(const std::vector<std::vector<gsflow::Rational>>& weight,
                           std::uint32_t bundle, std::uint32_t free_slots) {
  if (bundle == 0) return 0;
  int item = std::countr_zero(bundle);
  std::uint32_t rest = bundle & (bundle - 1);
  BigRat best = max_matching(weight, rest, free_slots);  // leave item unmatched
  for (std::size_t s = 0; s < weight.size(); ++s) {
    if (!((free_slots >> s) & 1u)) continue;
    BigRat v = big(weight[s][static_cast<std::size_t>(item)]) +
               max_matching(weight, rest, free_slots & ~(1u << s));
    best = std::max(best, v);
  }
  return best;
}

}  // namespace oracle
