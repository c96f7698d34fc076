#pragma once

#include <cassert>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gsflow/bundle.hpp"
#include "gsflow/rational.hpp"

namespace gsflow {

/// Thrown when a table fails the weak-monotonicity requirement. Carries a
/// witness pair X ⊆ Y with f(X) > f(Y).
class MonotonicityViolation : public std::invalid_argument {
public:
  MonotonicityViolation(Bundle smaller, Bundle larger, std::string what)
      : std::invalid_argument(std::move(what)), smaller_(smaller), larger_(larger) {}
  Bundle smaller() const { return smaller_; }
  Bundle larger() const { return larger_; }

private:
  Bundle smaller_, larger_;
};

/// A total set function f: 2^M -> Q over a named item universe, stored as an
/// explicit table of 2^m exact rationals. Not required to be monotone; this
/// is the representation shared by valuations and net-utility functions.
class SetFunction {
public:
  SetFunction(std::vector<std::string> items, std::vector<Rational> table,
              std::string label = {});

  int item_count() const { return static_cast<int>(items_.size()); }
  Bundle universe() const { return Bundle::full(item_count()); }
  const std::vector<std::string>& items() const { return items_; }
  const std::string& item_name(int i) const { return items_[static_cast<std::size_t>(i)]; }
  const std::string& label() const { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  const Rational& value(Bundle b) const {
    assert(b.mask() < table_.size());
    return table_[b.mask()];
  }
  const std::vector<Rational>& table() const { return table_; }

  /// Index of the named item, or nullopt.
  std::optional<int> find_item(const std::string& name) const;

  friend bool operator==(const SetFunction& a, const SetFunction& b) {
    return a.items_ == b.items_ && a.table_ == b.table_;
  }

private:
  std::vector<std::string> items_;
  std::vector<Rational> table_;
  std::string label_;
};

/// First adjacent pair (X, X ∪ {i}) with f(X) > f(X ∪ {i}), scanning X in
/// mask order and items ascending, or nullopt when f is weakly increasing.
std::optional<std::pair<Bundle, Bundle>> monotonicity_violation(const SetFunction& f);

/// A weakly-increasing set function. Construction verifies monotonicity and
/// throws MonotonicityViolation naming a witness pair otherwise.
class Valuation : public SetFunction {
public:
  explicit Valuation(SetFunction f);
  Valuation(std::vector<std::string> items, std::vector<Rational> table, std::string label = {})
      : Valuation(SetFunction(std::move(items), std::move(table), std::move(label))) {}

  /// u(X) = sum of per-item weights. Negative weights are rejected by the
  /// monotonicity check (witness ∅ ⊆ {i}).
  static Valuation additive(std::vector<std::string> items, std::vector<Rational> weights,
                            std::string label = {});

  /// u(X) = max per-item value in X, u(∅) = 0.
  static Valuation unit_demand(std::vector<std::string> items, std::vector<Rational> item_values,
                               std::string label = {});
};

/// Marginal valuation u_{Z+} on the universe M \ Z (item names preserved):
/// u_{Z+}(X) = u(Z ∪ X) - u(Z). Monotone whenever u is, and 0 at ∅.
Valuation marginal_valuation(const Valuation& u, Bundle endowment);

/// Restriction of u to the universe S, agreeing with u on all subsets of S.
Valuation restrict(const Valuation& u, Bundle keep);

}  // namespace gsflow
