#include "gsflow/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace gsflow::io {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& context, const std::string& what) {
  throw InputError(context.empty() ? what : context + ": " + what);
}

const json& require_field(const json& doc, const char* name, const std::string& context) {
  auto it = doc.find(name);
  if (it == doc.end()) fail(context, std::string("missing field '") + name + "'");
  return *it;
}

std::vector<std::string> items_from(const json& doc, const std::string& context) {
  const json& arr = require_field(doc, "items", context);
  if (!arr.is_array()) fail(context, "'items' must be an array of names");
  std::vector<std::string> items;
  for (const json& e : arr) {
    if (!e.is_string()) fail(context, "'items' must be an array of names");
    items.push_back(e.get<std::string>());
  }
  return items;
}

// names sorted lexicographically, carrying original indices
std::vector<std::pair<std::string, int>> sorted_names(const std::vector<std::string>& items) {
  std::vector<std::pair<std::string, int>> sorted;
  for (std::size_t i = 0; i < items.size(); ++i)
    sorted.emplace_back(items[i], static_cast<int>(i));
  std::sort(sorted.begin(), sorted.end());
  return sorted;
}

// the key is a sorted concatenation, so matches must use ascending ranks
void parse_key_rec(const std::string& key, std::size_t pos,
                   const std::vector<std::pair<std::string, int>>& sorted, std::size_t min_rank,
                   std::uint32_t mask, std::set<std::uint32_t>& results) {
  if (results.size() > 1) return;  // ambiguity already established
  if (pos == key.size()) {
    results.insert(mask);
    return;
  }
  for (std::size_t r = min_rank; r < sorted.size(); ++r) {
    const std::string& name = sorted[r].first;
    if (key.compare(pos, name.size(), name) == 0)
      parse_key_rec(key, pos + name.size(), sorted, r + 1,
                    mask | (1u << sorted[r].second), results);
  }
}

}  // namespace

Rational rational_from_json(const json& value, const std::string& context) {
  try {
    if (value.is_string()) return Rational::parse(value.get<std::string>());
    if (value.is_number_integer()) return Rational(value.get<std::int64_t>());
  } catch (const std::exception& e) {
    fail(context, e.what());
  }
  fail(context, "expected a rational as \"num\", \"num/den\" or an integer, got " + value.dump());
}

std::string bundle_key(const std::vector<std::string>& items, Bundle b) {
  std::vector<std::string> names;
  for (int i : b.items()) names.push_back(items[static_cast<std::size_t>(i)]);
  std::sort(names.begin(), names.end());
  std::string key;
  for (const auto& n : names) key += n;
  return key;
}

Bundle parse_bundle_key(const std::vector<std::string>& items, const std::string& key,
                        const std::string& context) {
  std::set<std::uint32_t> results;
  parse_key_rec(key, 0, sorted_names(items), 0, 0, results);
  if (results.empty())
    fail(context, "unknown bundle key '" + key +
                      "' (keys are sorted concatenations of item names)");
  if (results.size() > 1)
    fail(context, "ambiguous bundle key '" + key + "' in this universe");
  return Bundle::from_mask(*results.begin());
}

Valuation valuation_from_json(const json& doc, const std::string& context) {
  if (!doc.is_object()) fail(context, "valuation document must be a JSON object");
  std::vector<std::string> items = items_from(doc, context);
  const int m = static_cast<int>(items.size());
  if (m > kMaxItems) fail(context, "more than " + std::to_string(kMaxItems) + " items");

  const json& type_field = require_field(doc, "type", context);
  if (!type_field.is_string()) fail(context, "'type' must be a string");
  const std::string type = type_field.get<std::string>();
  const json& values = require_field(doc, "values", context);
  if (!values.is_object()) fail(context, "'values' must be an object");
  std::string label;
  if (auto it = doc.find("label"); it != doc.end() && it->is_string())
    label = it->get<std::string>();

  try {
    if (type == "table") {
      std::vector<Rational> table(bundle_count(m));
      std::vector<bool> seen(bundle_count(m), false);
      for (const auto& [key, value] : values.items()) {
        Bundle b = parse_bundle_key(items, key, context + ": values");
        table[b.mask()] = rational_from_json(value, context + ": values." + key);
        seen[b.mask()] = true;
      }
      for (std::uint32_t x = 1; x < bundle_count(m); ++x)
        if (!seen[x])
          fail(context, "missing table entry for bundle '" +
                            bundle_key(items, Bundle::from_mask(x)) + "'");
      // the empty bundle defaults to 0 when absent
      return Valuation(std::move(items), std::move(table), std::move(label));
    }

    if (type == "additive" || type == "unit-demand") {
      std::vector<Rational> weights(items.size());
      std::vector<bool> seen(items.size(), false);
      for (const auto& [key, value] : values.items()) {
        auto pos = std::find(items.begin(), items.end(), key);
        if (pos == items.end())
          fail(context, "'" + key + "' is not an item; " + type +
                            " values map single item names");
        std::size_t i = static_cast<std::size_t>(pos - items.begin());
        weights[i] = rational_from_json(value, context + ": values." + key);
        seen[i] = true;
      }
      for (std::size_t i = 0; i < items.size(); ++i)
        if (!seen[i]) fail(context, "missing value for item '" + items[i] + "'");
      return type == "additive"
                 ? Valuation::additive(std::move(items), std::move(weights), std::move(label))
                 : Valuation::unit_demand(std::move(items), std::move(weights), std::move(label));
    }
  } catch (const MonotonicityViolation&) {
    throw;  // carries its own witness message
  } catch (const InputError&) {
    throw;
  } catch (const std::exception& e) {
    fail(context, e.what());
  }
  fail(context, "unknown valuation type '" + type + "'");
}

Valuation load_valuation(const std::string& path) {
  json doc;
  try {
    doc = json::parse(read_file(path));
  } catch (const json::exception& e) {
    fail(path, e.what());
  }
  return valuation_from_json(doc, path);
}

nlohmann::json valuation_to_json(const SetFunction& f) {
  json values = json::object();
  for (std::uint32_t x = 0; x < bundle_count(f.item_count()); ++x) {
    Bundle b = Bundle::from_mask(x);
    values[bundle_key(f.items(), b)] = f.value(b).str();
  }
  json doc{{"items", f.items()}, {"type", "table"}, {"values", std::move(values)}};
  if (!f.label().empty()) doc["label"] = f.label();
  return doc;
}

PriceVector prices_from_json(const json& doc, const std::vector<std::string>& items,
                             const std::string& context) {
  if (!doc.is_object()) fail(context, "price document must be a JSON object");
  for (const auto& [key, value] : doc.items()) {
    (void)value;
    if (std::find(items.begin(), items.end(), key) == items.end())
      fail(context, "price for unknown item '" + key + "'");
  }
  PriceVector p;
  p.prices.reserve(items.size());
  for (const std::string& item : items) {
    auto it = doc.find(item);
    if (it == doc.end()) fail(context, "missing price for item '" + item + "'");
    p.prices.push_back(rational_from_json(*it, context + ": " + item));
  }
  return p;
}

PriceVector load_prices(const std::string& path, const std::vector<std::string>& items) {
  json doc;
  try {
    doc = json::parse(read_file(path));
  } catch (const json::exception& e) {
    fail(path, e.what());
  }
  return prices_from_json(doc, items, path);
}

ObservationData observations_from_json(const json& doc, const std::string& context) {
  if (!doc.is_object()) fail(context, "observation document must be a JSON object");
  ObservationData data;
  data.items = items_from(doc, context);
  if (static_cast<int>(data.items.size()) > kMaxItems)
    fail(context, "more than " + std::to_string(kMaxItems) + " items");
  const json& arr = require_field(doc, "observations", context);
  if (!arr.is_array()) fail(context, "'observations' must be an array");
  std::size_t index = 0;
  for (const json& entry : arr) {
    std::string at = context + ": observations[" + std::to_string(index) + "]";
    if (!entry.is_object()) fail(at, "must be an object");
    Observation obs;
    obs.prices = prices_from_json(require_field(entry, "prices", at), data.items, at + ".prices");
    const json& chosen = require_field(entry, "chosen", at);
    if (!chosen.is_string()) fail(at, "'chosen' must be a bundle key string");
    obs.chosen = parse_bundle_key(data.items, chosen.get<std::string>(), at + ".chosen");
    data.observations.push_back(std::move(obs));
    ++index;
  }
  return data;
}

ObservationData load_observations(const std::string& path) {
  json doc;
  try {
    doc = json::parse(read_file(path));
  } catch (const json::exception& e) {
    fail(path, e.what());
  }
  return observations_from_json(doc, path);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return std::move(buf).str();
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xCBF29CE484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001B3ull;
  }
  return h;
}

}  // namespace gsflow::io
