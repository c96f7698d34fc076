#include <doctest.h>

#include <set>

#include "gsflow/analysis.hpp"
#include "gsflow/flow.hpp"
#include "gsflow/gen.hpp"
#include "gsflow/rng.hpp"
#include "support/oracle.hpp"

using namespace gsflow;

TEST_CASE("generation is a pure function of the config") {
  GenConfig cfg{5, 9001, ValuationFamily::monotone_random, 0, 100};
  Valuation a = gen_valuation(cfg);
  Valuation b = gen_valuation(cfg);
  CHECK(a == static_cast<const SetFunction&>(b));
  CHECK(a.label() == "monotone-random-m5-seed9001");

  GenConfig other = cfg;
  other.seed = 9002;
  CHECK_FALSE(gen_valuation(other) == static_cast<const SetFunction&>(a));

  CHECK(gen_prices(5, 7, 0, 100) == gen_prices(5, 7, 0, 100));
}

TEST_CASE("GS families pass the exchange condition on every seed tried") {
  for (auto family :
       {ValuationFamily::unit_demand, ValuationFamily::additive, ValuationFamily::oxs}) {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
      Valuation u = gen_valuation({5, seed, family, 0, 60});
      CAPTURE(family_name(family));
      CAPTURE(seed);
      CHECK(is_mnat_concave(u));
    }
  }
}

TEST_CASE("oxs tables equal brute-force assignment enumeration") {
  // reproduce the generator's slot count and weights, then re-derive each
  // entry with the literal recursive matcher
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const int m = 4;
    Rng rng(seed);
    const int slots = static_cast<int>(rng.uniform(1, m));
    std::vector<std::vector<Rational>> weight(static_cast<std::size_t>(slots));
    for (auto& row : weight) {
      row.reserve(m);
      for (int i = 0; i < m; ++i) row.push_back(Rational(rng.uniform(0, 50)));
    }
    Valuation u = gen_valuation({m, seed, ValuationFamily::oxs, 0, 50});
    const std::uint32_t all_slots = (1u << slots) - 1;
    for (std::uint32_t x = 0; x < bundle_count(m); ++x) {
      CAPTURE(seed);
      CAPTURE(x);
      CHECK(oracle::big(u.value(Bundle::from_mask(x))) == oracle::max_matching(weight, x, all_slots));
    }
  }
}

TEST_CASE("monotone-random yields both GS and non-GS instances") {
  for (int m : {3, 4, 5}) {
    int gs = 0, non_gs = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      Valuation u = gen_valuation({m, seed, ValuationFamily::monotone_random, 0, 100});
      (is_mnat_concave(u) ? gs : non_gs) += 1;
    }
    CAPTURE(m);
    CHECK(gs >= 1);
    CHECK(non_gs >= 1);
  }
}

TEST_CASE("price generation") {
  PriceVector p = gen_prices(6, 31337, 0, 100);
  CHECK(p.item_count() == 6);
  for (int i = 0; i < 6; ++i) {
    CHECK(p[i] >= Rational(0));
    CHECK(p[i] <= Rational(100));
    CHECK(p[i].is_integer());
  }
  SUBCASE("a degenerate range yields constant prices") {
    PriceVector zeros = gen_prices(4, 5, 0, 0);
    for (int i = 0; i < 4; ++i) CHECK(zeros[i].is_zero());
  }
  SUBCASE("empty ranges are rejected") {
    CHECK_THROWS_AS(gen_prices(3, 1, 5, 4), std::invalid_argument);
  }
}

TEST_CASE("perturbed prices make all bundle prices distinct") {
  PriceVector p = gen_prices(6, 11, 0, 100);
  PriceVector tweaked = perturb_prices(p, 77);
  std::set<Rational> seen;
  for (std::uint32_t x = 0; x < bundle_count(6); ++x)
    CHECK(seen.insert(bundle_price(tweaked, Bundle::from_mask(x))).second);

  SUBCASE("identical seeds perturb identically") {
    CHECK(perturb_prices(p, 77) == tweaked);
    CHECK_FALSE(perturb_prices(p, 78) == tweaked);
  }
}

TEST_CASE("perturbation makes the demand bundle unique on integer tables") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Valuation u = gen_valuation({5, seed, ValuationFamily::monotone_random, 0, 40});
    PriceVector p = gen_prices(5, seed + 1, 0, 40);
    PriceVector tweaked = perturb_prices(p, seed + 2);
    CHECK(demand_set(u, tweaked).demands.size() == 1);
  }
}

TEST_CASE("config validation") {
  CHECK_THROWS_AS(gen_valuation({0, 1, ValuationFamily::additive, 0, 10}), std::invalid_argument);
  CHECK_THROWS_AS(gen_valuation({17, 1, ValuationFamily::additive, 0, 10}), std::invalid_argument);
  CHECK_THROWS_AS(gen_valuation({3, 1, ValuationFamily::additive, -5, 10}), std::invalid_argument);
  CHECK_THROWS_AS(gen_valuation({3, 1, ValuationFamily::additive, 9, 3}), std::invalid_argument);
}

TEST_CASE("family names round-trip") {
  for (auto family : {ValuationFamily::unit_demand, ValuationFamily::additive,
                      ValuationFamily::oxs, ValuationFamily::monotone_random})
    CHECK(parse_family(family_name(family)) == family);
  CHECK_FALSE(parse_family("nope").has_value());
}
