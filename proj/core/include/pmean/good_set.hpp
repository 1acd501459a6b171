#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace pmean {

// A subset of goods {0, ..., 63} stored as a bitmask; good j is bit j.
class GoodSet {
 public:
  static constexpr unsigned kMaxGoods = 64;

  constexpr GoodSet() = default;
  constexpr explicit GoodSet(std::uint64_t bits) : bits_(bits) {}

  // The set {0, ..., m-1}.
  static constexpr GoodSet full(unsigned m) {
    return GoodSet(m >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1);
  }
  static constexpr GoodSet single(unsigned good) {
    return GoodSet(std::uint64_t{1} << good);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr unsigned size() const { return static_cast<unsigned>(std::popcount(bits_)); }
  constexpr bool contains(unsigned good) const { return (bits_ >> good) & 1u; }

  constexpr void insert(unsigned good) { bits_ |= std::uint64_t{1} << good; }
  constexpr void erase(unsigned good) { bits_ &= ~(std::uint64_t{1} << good); }

  // Lowest member; the set must be nonempty.
  constexpr unsigned first() const { return static_cast<unsigned>(std::countr_zero(bits_)); }

  constexpr bool subset_of(GoodSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool disjoint(GoodSet other) const { return (bits_ & other.bits_) == 0; }
  constexpr bool within(unsigned m) const { return subset_of(full(m)); }

  constexpr GoodSet operator|(GoodSet o) const { return GoodSet(bits_ | o.bits_); }
  constexpr GoodSet operator&(GoodSet o) const { return GoodSet(bits_ & o.bits_); }
  // Set difference.
  constexpr GoodSet operator-(GoodSet o) const { return GoodSet(bits_ & ~o.bits_); }
  constexpr GoodSet& operator|=(GoodSet o) { bits_ |= o.bits_; return *this; }
  constexpr GoodSet& operator&=(GoodSet o) { bits_ &= o.bits_; return *this; }
  constexpr GoodSet& operator-=(GoodSet o) { bits_ &= ~o.bits_; return *this; }

  constexpr bool operator==(const GoodSet&) const = default;

  // Members in ascending order.
  std::vector<unsigned> members() const {
    std::vector<unsigned> out;
    out.reserve(size());
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
      out.push_back(static_cast<unsigned>(std::countr_zero(b)));
    }
    return out;
  }

 private:
  std::uint64_t bits_ = 0;
};

}  // namespace pmean
