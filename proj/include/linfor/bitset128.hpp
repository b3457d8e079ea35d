#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace linfor {

// Fixed-width 128-bit vertex set. Two machine words, no heap; a full
// adjacency row or witness set for any supported graph fits in one.
struct Bitset128 {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;

  static Bitset128 single(int i) {
    Bitset128 b;
    b.set(i);
    return b;
  }

  // Bits 0..n-1 set.
  static Bitset128 first_n(int n) {
    Bitset128 b;
    if (n <= 0) return b;
    if (n >= 128) {
      b.lo = b.hi = ~0ull;
    } else if (n >= 64) {
      b.lo = ~0ull;
      b.hi = (n == 64) ? 0 : ((1ull << (n - 64)) - 1);
    } else {
      b.lo = (1ull << n) - 1;
    }
    return b;
  }

  void set(int i) { (i < 64 ? lo : hi) |= 1ull << (i & 63); }
  void reset(int i) { (i < 64 ? lo : hi) &= ~(1ull << (i & 63)); }
  bool test(int i) const { return ((i < 64 ? lo : hi) >> (i & 63)) & 1u; }

  int count() const { return std::popcount(lo) + std::popcount(hi); }
  bool none() const { return (lo | hi) == 0; }
  bool any() const { return !none(); }

  Bitset128 operator&(const Bitset128& o) const { return {lo & o.lo, hi & o.hi}; }
  Bitset128 operator|(const Bitset128& o) const { return {lo | o.lo, hi | o.hi}; }
  Bitset128 operator^(const Bitset128& o) const { return {lo ^ o.lo, hi ^ o.hi}; }
  Bitset128& operator&=(const Bitset128& o) { lo &= o.lo; hi &= o.hi; return *this; }
  Bitset128& operator|=(const Bitset128& o) { lo |= o.lo; hi |= o.hi; return *this; }
  Bitset128& operator^=(const Bitset128& o) { lo ^= o.lo; hi ^= o.hi; return *this; }

  // this \ o
  Bitset128 minus(const Bitset128& o) const { return {lo & ~o.lo, hi & ~o.hi}; }
  // ~this restricted to vertices 0..n-1
  Bitset128 complement_within(int n) const { return first_n(n).minus(*this); }

  bool subset_of(const Bitset128& o) const { return (lo & ~o.lo) == 0 && (hi & ~o.hi) == 0; }
  bool intersects(const Bitset128& o) const { return ((lo & o.lo) | (hi & o.hi)) != 0; }

  // Lowest set bit index, -1 when empty.
  int lowest() const {
    if (lo) return std::countr_zero(lo);
    if (hi) return 64 + std::countr_zero(hi);
    return -1;
  }

  bool operator==(const Bitset128&) const = default;

  template <typename F>
  void for_each(F&& f) const {
    for (std::uint64_t w = lo; w; w &= w - 1) f(std::countr_zero(w));
    for (std::uint64_t w = hi; w; w &= w - 1) f(64 + std::countr_zero(w));
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count()));
    for_each([&](int i) { out.push_back(i); });
    return out;
  }

  // Set-lexicographic order for equal-size tie-breaking: the set containing
  // the smallest element on which the two differ comes first.
  static bool lex_less(const Bitset128& a, const Bitset128& b) {
    Bitset128 d = a ^ b;
    int i = d.lowest();
    return i >= 0 && a.test(i);
  }
};

struct Bitset128Hash {
  std::size_t operator()(const Bitset128& b) const {
    std::uint64_t x = b.lo * 0x9e3779b97f4a7c15ull;
    x ^= (b.hi + 0x9e3779b97f4a7c15ull + (x << 6) + (x >> 2));
    return static_cast<std::size_t>(x * 0xff51afd7ed558ccdull);
  }
};

// Index of pair (i, j), i < j, in the column-major upper-triangle order
// (0,1), (0,2), (1,2), (0,3), (1,3), (2,3), ...  Shared by the graph6
// codec and canonical-form machinery so both agree bit for bit.
inline int tri_index(int i, int j) { return j * (j - 1) / 2 + i; }

}  // namespace linfor
