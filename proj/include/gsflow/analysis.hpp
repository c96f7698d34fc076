#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gsflow/prices.hpp"

namespace gsflow {

/// One exchange candidate tried while refuting the M♮ condition: the chosen
/// Y' together with both sides of the exchange inequality
/// f(X\X' ∪ Y') + f(Y\Y' ∪ X') >= f(X) + f(Y).
struct ExchangeCandidate {
  Bundle y_prime;
  Rational lhs;
  Rational rhs;
};

/// Witness that f is not M♮-concave: a pair (X, Y) and a singleton
/// X' ⊆ X\Y for which every candidate Y' (the empty set and each singleton
/// of Y\X) fails the exchange inequality. Canonical: lexicographically
/// smallest by X mask, then Y mask, then X' item.
struct MViolationWitness {
  Bundle x_set;
  Bundle y_set;
  Bundle x_prime;
  std::vector<ExchangeCandidate> tried;
};

/// Full scan of all bundle pairs. nullopt means f is M♮-concave, which is
/// equivalent to the gross-substitutes property. Accepts any set function,
/// monotone or not.
std::optional<MViolationWitness> mnat_violation(const SetFunction& f);

inline bool is_mnat_concave(const SetFunction& f) { return !mnat_violation(f).has_value(); }

/// Direct gross-substitutes check on one admissible price pair: every item
/// with Δx = 0 that is p-demanded must stay q-demanded. Returns the lowest
/// violating item index, or nullopt. Throws std::invalid_argument unless
/// Δy >= 0 for every y.
std::optional<int> gs_definition_violation(const SetFunction& u, const PriceVector& p,
                                           const PriceVector& q);

/// All maximizers of f among bundles with exactly `size` items.
struct SizeMaximizers {
  int size = 0;
  std::vector<Bundle> bundles;  // mask order
  Rational optimum;
};

/// Exhaustive scan; throws std::out_of_range unless 0 <= size <= m.
SizeMaximizers size_maximizers(const SetFunction& f, int size);

/// Telescopic failure: for sizes i < j, either an i-maximizer contained in
/// no j-maximizer (part 'a') or a j-maximizer containing no i-maximizer
/// (part 'b'). The scan reports the first failure in (i, j, part, bundle)
/// order, so output is canonical.
struct TelescopicViolation {
  int small_size, large_size;
  char part;  // 'a' or 'b'
  Bundle witness;
};

std::optional<TelescopicViolation> telescopic_violation(const SetFunction& f);

/// Outcome of the bounded randomized search for a direct GS violation.
/// `found` carries the certified price pair and item; an inconclusive search
/// reports only how many admissible pairs were sampled. Never treat
/// inconclusive as a pass.
struct GsSearchResult {
  bool found = false;
  PriceVector p, q;
  int item = -1;
  int samples_used = 0;
};

/// Samples admissible price pairs (random integer base prices, raises on a
/// random proper subset of items) and tests the GS definition on each. The
/// search is deterministic in (u, max_samples, seed).
GsSearchResult find_gs_definition_violation(const SetFunction& u, int max_samples,
                                            std::uint64_t seed);

}  // namespace gsflow
