#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "gsflow/prices.hpp"
#include "gsflow/valuation.hpp"

namespace gsflow {

/// Generator families. unit-demand, additive and oxs are gross-substitute
/// by construction; monotone-random is monotone by construction and yields
/// both GS and non-GS instances.
enum class ValuationFamily { unit_demand, additive, oxs, monotone_random };

const char* family_name(ValuationFamily family);
std::optional<ValuationFamily> parse_family(std::string_view name);

struct GenConfig {
  int item_count = 4;
  std::uint64_t seed = 0;
  ValuationFamily family = ValuationFamily::monotone_random;
  std::int64_t value_min = 0;  // non-negative, to preserve monotonicity
  std::int64_t value_max = 100;
};

/// Pure function of the config; identical configs yield identical tables on
/// every platform. Item names are single letters 'a', 'b', ... and the seed
/// is recorded in the label.
Valuation gen_valuation(const GenConfig& cfg);

/// Uniform integer prices in [lo, hi], one stream position per item.
PriceVector gen_prices(int item_count, std::uint64_t seed, std::int64_t lo, std::int64_t hi);

/// Adds a distinct tiny rational (numerator a seeded permutation of powers
/// of two, denominator one prime exceeding 2^22, every input denominator and
/// min_denominator) to each price, so all 2^m bundle prices become distinct.
/// Pass the largest denominator appearing in a valuation table as
/// min_denominator to also guarantee a unique demand bundle under that
/// valuation.
PriceVector perturb_prices(const PriceVector& p, std::uint64_t seed,
                           std::int64_t min_denominator = 1);

}  // namespace gsflow
