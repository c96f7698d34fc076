#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace gsflow {

/// Hard cap on the item universe. Every algorithm here enumerates the full
/// subset lattice, so the cap keeps all operations at desk scale.
inline constexpr int kMaxItems = 16;

/// A bundle of items, stored as a bitmask over item indices 0..m-1.
class Bundle {
public:
  constexpr Bundle() = default;
  static constexpr Bundle from_mask(std::uint32_t mask) { return Bundle(mask); }
  static constexpr Bundle single(int item) { return Bundle(1u << item); }
  static constexpr Bundle full(int item_count) { return Bundle((1u << item_count) - 1u); }

  constexpr std::uint32_t mask() const { return mask_; }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr int size() const { return std::popcount(mask_); }
  constexpr bool contains(int item) const { return (mask_ >> item) & 1u; }
  constexpr bool is_subset_of(Bundle other) const { return (mask_ & ~other.mask_) == 0; }
  constexpr bool intersects(Bundle other) const { return (mask_ & other.mask_) != 0; }

  constexpr Bundle with(int item) const { return Bundle(mask_ | (1u << item)); }
  constexpr Bundle without(int item) const { return Bundle(mask_ & ~(1u << item)); }

  friend constexpr Bundle operator|(Bundle a, Bundle b) { return Bundle(a.mask_ | b.mask_); }
  friend constexpr Bundle operator&(Bundle a, Bundle b) { return Bundle(a.mask_ & b.mask_); }
  /// Set difference a \ b.
  friend constexpr Bundle operator-(Bundle a, Bundle b) { return Bundle(a.mask_ & ~b.mask_); }

  friend constexpr bool operator==(Bundle a, Bundle b) = default;
  /// Mask order; used everywhere a canonical enumeration order is needed.
  friend constexpr auto operator<=>(Bundle a, Bundle b) { return a.mask_ <=> b.mask_; }

  /// Item indices present in this bundle, ascending.
  std::vector<int> items() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint32_t m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
    return out;
  }

private:
  explicit constexpr Bundle(std::uint32_t mask) : mask_(mask) {}
  std::uint32_t mask_ = 0;
};

/// All 2^m bundles of an m-item universe in mask order.
inline std::uint32_t bundle_count(int item_count) { return 1u << item_count; }

}  // namespace gsflow
