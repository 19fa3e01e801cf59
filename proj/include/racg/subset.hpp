#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <vector>

namespace racg {

inline constexpr int kMaxGenerators = 64;

/// A set of generator indices, stored as a 64-bit mask.
///
/// Ordering (operator<=>) is the canonical subset order: lexicographic on the
/// increasing list of members, so {a} < {a,b} < {a,c} < {b}.
class GenSubset {
 public:
  constexpr GenSubset() = default;
  constexpr explicit GenSubset(std::uint64_t bits) : bits_(bits) {}

  static constexpr GenSubset singleton(int i) { return GenSubset(std::uint64_t{1} << i); }
  static constexpr GenSubset full(int n) {
    return GenSubset(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static GenSubset of(const std::vector<int>& members) {
    GenSubset s;
    for (int i : members) s.insert(i);
    return s;
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int i) const { return (bits_ >> i) & 1u; }
  constexpr bool subset_of(GenSubset other) const { return (bits_ & ~other.bits_) == 0; }

  constexpr void insert(int i) { bits_ |= std::uint64_t{1} << i; }
  constexpr void erase(int i) { bits_ &= ~(std::uint64_t{1} << i); }

  std::vector<int> members() const {
    std::vector<int> out;
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  friend constexpr GenSubset operator&(GenSubset a, GenSubset b) { return GenSubset(a.bits_ & b.bits_); }
  friend constexpr GenSubset operator|(GenSubset a, GenSubset b) { return GenSubset(a.bits_ | b.bits_); }
  friend constexpr GenSubset operator-(GenSubset a, GenSubset b) { return GenSubset(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(GenSubset a, GenSubset b) = default;

  friend constexpr std::strong_ordering operator<=>(GenSubset a, GenSubset b) {
    std::uint64_t x = a.bits_, y = b.bits_;
    while (x != 0 && y != 0) {
      int i = std::countr_zero(x), j = std::countr_zero(y);
      if (i != j) return i < j ? std::strong_ordering::less : std::strong_ordering::greater;
      x &= x - 1;
      y &= y - 1;
    }
    if (x == y) return std::strong_ordering::equal;
    return x == 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }

 private:
  std::uint64_t bits_ = 0;
};

}  // namespace racg
