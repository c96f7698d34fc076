#include "gsflow/valuation.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace gsflow {

namespace {

std::string bundle_names(const SetFunction& f, Bundle b) {
  if (b.empty()) return "{}";
  std::vector<std::string> names;
  for (int i : b.items()) names.push_back(f.item_name(i));
  std::sort(names.begin(), names.end());
  std::string out = "{";
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) out += ",";
    out += names[i];
  }
  return out + "}";
}

}  // namespace

SetFunction::SetFunction(std::vector<std::string> items, std::vector<Rational> table,
                         std::string label)
    : items_(std::move(items)), table_(std::move(table)), label_(std::move(label)) {
  if (items_.size() > static_cast<std::size_t>(kMaxItems))
    throw std::invalid_argument("item universe exceeds the cap of " +
                                std::to_string(kMaxItems) + " items");
  std::set<std::string> seen;
  for (const auto& name : items_) {
    if (name.empty()) throw std::invalid_argument("empty item name");
    if (!seen.insert(name).second)
      throw std::invalid_argument("duplicate item name '" + name + "'");
  }
  if (table_.size() != bundle_count(item_count()))
    throw std::invalid_argument("table has " + std::to_string(table_.size()) +
                                " entries, expected " + std::to_string(bundle_count(item_count())));
}

std::optional<int> SetFunction::find_item(const std::string& name) const {
  for (int i = 0; i < item_count(); ++i)
    if (items_[static_cast<std::size_t>(i)] == name) return i;
  return std::nullopt;
}

std::optional<std::pair<Bundle, Bundle>> monotonicity_violation(const SetFunction& f) {
  const int m = f.item_count();
  for (std::uint32_t x = 0; x < bundle_count(m); ++x) {
    Bundle X = Bundle::from_mask(x);
    for (int i = 0; i < m; ++i) {
      if (X.contains(i)) continue;
      Bundle Y = X.with(i);
      if (f.value(X) > f.value(Y)) return std::make_pair(X, Y);
    }
  }
  return std::nullopt;
}

Valuation::Valuation(SetFunction f) : SetFunction(std::move(f)) {
  if (auto w = monotonicity_violation(*this)) {
    std::ostringstream msg;
    msg << "valuation is not weakly increasing: value(" << bundle_names(*this, w->first)
        << ") = " << value(w->first) << " > value(" << bundle_names(*this, w->second)
        << ") = " << value(w->second);
    throw MonotonicityViolation(w->first, w->second, msg.str());
  }
}

Valuation Valuation::additive(std::vector<std::string> items, std::vector<Rational> weights,
                              std::string label) {
  if (weights.size() != items.size())
    throw std::invalid_argument("additive: need one weight per item");
  const int m = static_cast<int>(items.size());
  std::vector<Rational> table(bundle_count(m));
  for (std::uint32_t x = 1; x < bundle_count(m); ++x) {
    std::uint32_t low = x & (x - 1);
    int item = std::countr_zero(x);
    table[x] = table[low] + weights[static_cast<std::size_t>(item)];
  }
  return Valuation(std::move(items), std::move(table), std::move(label));
}

Valuation Valuation::unit_demand(std::vector<std::string> items, std::vector<Rational> item_values,
                                 std::string label) {
  if (item_values.size() != items.size())
    throw std::invalid_argument("unit-demand: need one value per item");
  const int m = static_cast<int>(items.size());
  std::vector<Rational> table(bundle_count(m));
  for (std::uint32_t x = 1; x < bundle_count(m); ++x) {
    std::uint32_t low = x & (x - 1);
    int item = std::countr_zero(x);
    table[x] = std::max(table[low], item_values[static_cast<std::size_t>(item)]);
  }
  return Valuation(std::move(items), std::move(table), std::move(label));
}

namespace {

// Positions of the kept items give the index mapping for a sub-universe.
std::vector<std::string> sub_items(const SetFunction& u, Bundle keep) {
  std::vector<std::string> items;
  for (int i : keep.items()) items.push_back(u.item_name(i));
  return items;
}

// Spreads the bits of a sub-universe mask back into full-universe positions.
std::uint32_t lift_mask(std::uint32_t sub, const std::vector<int>& positions) {
  std::uint32_t full = 0;
  for (std::size_t k = 0; k < positions.size(); ++k)
    if ((sub >> k) & 1u) full |= 1u << positions[k];
  return full;
}

}  // namespace

Valuation marginal_valuation(const Valuation& u, Bundle endowment) {
  Bundle rest = u.universe() - endowment;
  auto positions = rest.items();
  const int ms = static_cast<int>(positions.size());
  std::vector<Rational> table(bundle_count(ms));
  const Rational& base = u.value(endowment);
  for (std::uint32_t x = 0; x < bundle_count(ms); ++x)
    table[x] = u.value(Bundle::from_mask(lift_mask(x, positions)) | endowment) - base;
  return Valuation(sub_items(u, rest), std::move(table), u.label());
}

Valuation restrict(const Valuation& u, Bundle keep) {
  auto positions = keep.items();
  const int ms = static_cast<int>(positions.size());
  std::vector<Rational> table(bundle_count(ms));
  for (std::uint32_t x = 0; x < bundle_count(ms); ++x)
    table[x] = u.value(Bundle::from_mask(lift_mask(x, positions)));
  return Valuation(sub_items(u, keep), std::move(table), u.label());
}

}  // namespace gsflow
