#pragma once

// Fixed-capacity bit set used by the hot search loops. Capacity is 64*W bits;
// the search engines are instantiated for W in {1, 2, 4, 8} and dispatched on
// the coloring length at runtime.

#include <array>
#include <bit>
#include <cstdint>

namespace ramsey {

template <int W>
struct WordBits {
  static constexpr int kWords = W;
  static constexpr int kCapacity = 64 * W;

  std::array<uint64_t, W> w{};

  constexpr bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1u; }
  constexpr void set(int i) { w[i >> 6] |= uint64_t{1} << (i & 63); }
  constexpr void reset(int i) { w[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
  constexpr void flip(int i) { w[i >> 6] ^= uint64_t{1} << (i & 63); }

  constexpr bool any() const {
    uint64_t acc = 0;
    for (int k = 0; k < W; ++k) acc |= w[k];
    return acc != 0;
  }
  constexpr bool none() const { return !any(); }

  constexpr int count() const {
    int n = 0;
    for (int k = 0; k < W; ++k) n += std::popcount(w[k]);
    return n;
  }

  // -1 when empty.
  constexpr int lowest() const {
    for (int k = 0; k < W; ++k)
      if (w[k]) return 64 * k + std::countr_zero(w[k]);
    return -1;
  }
  constexpr int highest() const {
    for (int k = W - 1; k >= 0; --k)
      if (w[k]) return 64 * k + 63 - std::countl_zero(w[k]);
    return -1;
  }

  // True when every bit of `sub` is also set here.
  constexpr bool contains(const WordBits& sub) const {
    for (int k = 0; k < W; ++k)
      if ((sub.w[k] & ~w[k]) != 0) return false;
    return true;
  }
  constexpr bool intersects(const WordBits& o) const {
    for (int k = 0; k < W; ++k)
      if (w[k] & o.w[k]) return true;
    return false;
  }

  constexpr WordBits& operator&=(const WordBits& o) {
    for (int k = 0; k < W; ++k) w[k] &= o.w[k];
    return *this;
  }
  constexpr WordBits& operator|=(const WordBits& o) {
    for (int k = 0; k < W; ++k) w[k] |= o.w[k];
    return *this;
  }
  constexpr WordBits& operator^=(const WordBits& o) {
    for (int k = 0; k < W; ++k) w[k] ^= o.w[k];
    return *this;
  }
  // This minus o.
  constexpr WordBits andnot(const WordBits& o) const {
    WordBits r = *this;
    for (int k = 0; k < W; ++k) r.w[k] &= ~o.w[k];
    return r;
  }
  friend constexpr WordBits operator&(WordBits a, const WordBits& b) { return a &= b; }
  friend constexpr WordBits operator|(WordBits a, const WordBits& b) { return a |= b; }
  friend constexpr WordBits operator^(WordBits a, const WordBits& b) { return a ^= b; }
  friend constexpr bool operator==(const WordBits&, const WordBits&) = default;

  constexpr WordBits shl(int s) const {
    WordBits r;
    if (s >= kCapacity) return r;
    const int ws = s >> 6, bs = s & 63;
    for (int k = W - 1; k >= ws; --k) {
      uint64_t v = w[k - ws] << bs;
      if (bs && k - ws - 1 >= 0) v |= w[k - ws - 1] >> (64 - bs);
      r.w[k] = v;
    }
    return r;
  }
  constexpr WordBits shr(int s) const {
    WordBits r;
    if (s >= kCapacity) return r;
    const int ws = s >> 6, bs = s & 63;
    for (int k = 0; k + ws < W; ++k) {
      uint64_t v = w[k + ws] >> bs;
      if (bs && k + ws + 1 < W) v |= w[k + ws + 1] << (64 - bs);
      r.w[k] = v;
    }
    return r;
  }

  // Bits [0, n).
  static constexpr WordBits low(int n) {
    WordBits r;
    for (int k = 0; k < W; ++k) {
      const int lo = 64 * k;
      if (n >= lo + 64)
        r.w[k] = ~uint64_t{0};
      else if (n > lo)
        r.w[k] = (uint64_t{1} << (n - lo)) - 1;
    }
    return r;
  }
  static constexpr WordBits single(int i) {
    WordBits r;
    r.set(i);
    return r;
  }

  // Bit i of the result is bit (kCapacity-1-i) of this.
  constexpr WordBits reversed() const {
    WordBits r;
    for (int k = 0; k < W; ++k) {
      uint64_t v = w[k];
      v = ((v >> 1) & 0x5555555555555555ULL) | ((v & 0x5555555555555555ULL) << 1);
      v = ((v >> 2) & 0x3333333333333333ULL) | ((v & 0x3333333333333333ULL) << 2);
      v = ((v >> 4) & 0x0F0F0F0F0F0F0F0FULL) | ((v & 0x0F0F0F0F0F0F0F0FULL) << 4);
      v = ((v >> 8) & 0x00FF00FF00FF00FFULL) | ((v & 0x00FF00FF00FF00FFULL) << 8);
      v = ((v >> 16) & 0x0000FFFF0000FFFFULL) | ((v & 0x0000FFFF0000FFFFULL) << 16);
      v = (v >> 32) | (v << 32);
      r.w[W - 1 - k] = v;
    }
    return r;
  }

  template <class F>
  constexpr void for_each(F&& f) const {
    for (int k = 0; k < W; ++k) {
      uint64_t v = w[k];
      while (v) {
        f(64 * k + std::countr_zero(v));
        v &= v - 1;
      }
    }
  }
};

// Smallest supported width holding `bits` bits; 0 if none does.
constexpr int width_for(int bits) {
  if (bits <= 64) return 1;
  if (bits <= 128) return 2;
  if (bits <= 256) return 4;
  if (bits <= 512) return 8;
  return 0;
}

inline constexpr int kMaxLinkBits = 512;

// Calls f.template operator()<W>() for the width that fits `bits`.
template <class F>
decltype(auto) dispatch_width(int bits, F&& f) {
  switch (width_for(bits)) {
    case 1: return f.template operator()<1>();
    case 2: return f.template operator()<2>();
    case 4: return f.template operator()<4>();
    default: return f.template operator()<8>();
  }
}

}  // namespace ramsey
