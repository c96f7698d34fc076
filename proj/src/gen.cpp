#include "gsflow/gen.hpp"

#include <algorithm>
#include <numeric>

#include "gsflow/rng.hpp"

namespace gsflow {

const char* family_name(ValuationFamily family) {
  switch (family) {
    case ValuationFamily::unit_demand: return "unit-demand";
    case ValuationFamily::additive: return "additive";
    case ValuationFamily::oxs: return "oxs";
    case ValuationFamily::monotone_random: return "monotone-random";
  }
  return "?";
}

std::optional<ValuationFamily> parse_family(std::string_view name) {
  if (name == "unit-demand") return ValuationFamily::unit_demand;
  if (name == "additive") return ValuationFamily::additive;
  if (name == "oxs") return ValuationFamily::oxs;
  if (name == "monotone-random") return ValuationFamily::monotone_random;
  return std::nullopt;
}

namespace {

std::vector<std::string> letter_items(int m) {
  std::vector<std::string> items;
  items.reserve(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) items.push_back(std::string(1, static_cast<char>('a' + i)));
  return items;
}

std::vector<Rational> random_values(Rng& rng, int count, std::int64_t lo, std::int64_t hi) {
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) out.push_back(Rational(rng.uniform(lo, hi)));
  return out;
}

// max-weight matching of the bundle's items into unit-capacity slots,
// built slot by slot: a slot is either unused or takes one item, with the
// rest matched among the earlier slots
std::vector<Rational> oxs_table(Rng& rng, int m, std::int64_t lo, std::int64_t hi) {
  const int slots = static_cast<int>(rng.uniform(1, m));
  std::vector<std::vector<Rational>> weight(static_cast<std::size_t>(slots));
  for (auto& row : weight) row = random_values(rng, m, lo, hi);

  std::vector<Rational> table(bundle_count(m));  // zero slots: all zero
  for (int s = 0; s < slots; ++s) {
    std::vector<Rational> next(bundle_count(m));
    for (std::uint32_t x = 0; x < bundle_count(m); ++x) {
      Rational best = table[x];  // slot s unused
      for (std::uint32_t rem = x; rem != 0; rem &= rem - 1) {
        int t = std::countr_zero(rem);
        Rational v = table[x & ~(1u << t)] + weight[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)];
        if (v > best) best = v;
      }
      next[x] = best;
    }
    table = std::move(next);
  }
  return table;
}

std::vector<Rational> monotone_random_table(Rng& rng, int m, std::int64_t lo, std::int64_t hi) {
  std::vector<Rational> table(bundle_count(m));
  // ascending mask order visits every subset before its supersets
  for (std::uint32_t x = 1; x < bundle_count(m); ++x) {
    Rational v(rng.uniform(lo, hi));
    for (std::uint32_t rem = x; rem != 0; rem &= rem - 1) {
      int i = std::countr_zero(rem);
      v = std::max(v, table[x & ~(1u << i)]);
    }
    table[x] = v;
  }
  return table;
}

}  // namespace

Valuation gen_valuation(const GenConfig& cfg) {
  if (cfg.item_count < 1 || cfg.item_count > kMaxItems)
    throw std::invalid_argument("item count must be in 1.." + std::to_string(kMaxItems));
  if (cfg.value_min < 0 || cfg.value_min > cfg.value_max)
    throw std::invalid_argument("need 0 <= value_min <= value_max");

  Rng rng(cfg.seed);
  const int m = cfg.item_count;
  std::string label = std::string(family_name(cfg.family)) + "-m" + std::to_string(m) + "-seed" +
                      std::to_string(cfg.seed);

  switch (cfg.family) {
    case ValuationFamily::unit_demand:
      return Valuation::unit_demand(letter_items(m), random_values(rng, m, cfg.value_min, cfg.value_max),
                                    label);
    case ValuationFamily::additive:
      return Valuation::additive(letter_items(m), random_values(rng, m, cfg.value_min, cfg.value_max),
                                 label);
    case ValuationFamily::oxs:
      return Valuation(letter_items(m), oxs_table(rng, m, cfg.value_min, cfg.value_max), label);
    case ValuationFamily::monotone_random:
      return Valuation(letter_items(m), monotone_random_table(rng, m, cfg.value_min, cfg.value_max),
                       label);
  }
  throw std::invalid_argument("unknown valuation family");
}

PriceVector gen_prices(int item_count, std::uint64_t seed, std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw std::invalid_argument("empty price range");
  Rng rng(seed);
  PriceVector p;
  p.prices = random_values(rng, item_count, lo, hi);
  return p;
}

namespace {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::int64_t next_prime_above(std::int64_t n) {
  std::int64_t c = n + 1;
  while (!is_prime(c)) ++c;
  return c;
}

}  // namespace

PriceVector perturb_prices(const PriceVector& p, std::uint64_t seed, std::int64_t min_denominator) {
  const int m = p.item_count();
  if (m > kMaxItems) throw std::invalid_argument("too many items");

  std::int64_t floor = 1 << 22;  // keeps every epsilon below 2^m / 2^22 < 1/64
  for (const Rational& x : p.prices) floor = std::max(floor, x.den());
  floor = std::max(floor, min_denominator);
  const std::int64_t prime = next_prime_above(floor);

  // distinct powers of two as numerators: subset sums of the epsilons are
  // distinct, so no two bundle prices can collide
  std::vector<int> exponent(static_cast<std::size_t>(m));
  std::iota(exponent.begin(), exponent.end(), 0);
  Rng rng(seed);
  for (int i = m - 1; i > 0; --i)
    std::swap(exponent[static_cast<std::size_t>(i)],
              exponent[static_cast<std::size_t>(rng.uniform(0, i))]);

  PriceVector out = p;
  for (int i = 0; i < m; ++i)
    out[i] += Rational(std::int64_t{1} << exponent[static_cast<std::size_t>(i)], prime);
  return out;
}

}  // namespace gsflow
