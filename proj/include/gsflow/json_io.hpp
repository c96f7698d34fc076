#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "gsflow/flow.hpp"
#include "gsflow/valuation.hpp"

namespace gsflow::io {

/// Malformed input file or field. The message carries the file path (when
/// known) and the offending field.
class InputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// "num", "num/den" strings or plain JSON integers.
Rational rational_from_json(const nlohmann::json& value, const std::string& context);

/// Concatenation of the bundle's item names in lexicographic order
/// ("" for the empty bundle). This is the key format of valuation files.
std::string bundle_key(const std::vector<std::string>& items, Bundle b);

/// Inverse of bundle_key. Rejects keys that do not parse or that parse
/// ambiguously (possible when one item name is a concatenation of others).
Bundle parse_bundle_key(const std::vector<std::string>& items, const std::string& key,
                        const std::string& context);

/// Valuation document: { "items": [...], "type": "table" | "additive" |
/// "unit-demand", "values": {...}, "label": optional }. Table values map
/// bundle keys (the empty bundle may be omitted and defaults to 0);
/// additive / unit-demand values map single item names.
Valuation valuation_from_json(const nlohmann::json& doc, const std::string& context);
Valuation load_valuation(const std::string& path);

/// Serializes any set function as a type "table" document (full 2^m map,
/// label included when present).
nlohmann::json valuation_to_json(const SetFunction& f);

/// Price document: { "item": "rational", ... }, exactly one entry per
/// universe item.
PriceVector prices_from_json(const nlohmann::json& doc, const std::vector<std::string>& items,
                             const std::string& context);
PriceVector load_prices(const std::string& path, const std::vector<std::string>& items);

struct ObservationData {
  std::vector<std::string> items;
  std::vector<Observation> observations;
};

/// Observation document: { "items": [...], "observations":
/// [ { "prices": {...}, "chosen": "bundle-key" }, ... ] }.
ObservationData observations_from_json(const nlohmann::json& doc, const std::string& context);
ObservationData load_observations(const std::string& path);

std::string read_file(const std::string& path);

/// FNV-1a 64-bit content hash, used as the inputs digest in reports.
std::uint64_t fnv1a64(std::string_view bytes);

}  // namespace gsflow::io
