#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ramsey/word_bits.hpp"

namespace ramsey {

// Variable-length bit set. Bits at positions >= size() are always zero.
class BitMask {
 public:
  BitMask() = default;
  explicit BitMask(std::size_t len) : words_((len + 63) / 64, 0), len_(len) {}

  // "0110" -> bit 0 = '0', bit 1 = '1', ...
  static BitMask from_string(std::string_view bits);
  static BitMask ones(std::size_t len);

  std::size_t size() const { return len_; }
  bool empty() const { return len_ == 0; }

  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i, bool value = true) {
    const uint64_t bit = uint64_t{1} << (i & 63);
    if (value)
      words_[i >> 6] |= bit;
    else
      words_[i >> 6] &= ~bit;
  }
  void reset(std::size_t i) { set(i, false); }
  void flip(std::size_t i) { words_[i >> 6] ^= uint64_t{1} << (i & 63); }

  std::size_t count() const;
  bool none() const;
  bool any() const { return !none(); }
  bool all() const { return count() == len_; }
  std::optional<std::size_t> lowest() const;
  std::optional<std::size_t> highest() const;

  // Same bits, new logical length (truncates or zero-extends).
  BitMask resized(std::size_t len) const;
  BitMask complement() const;
  bool is_subset_of(const BitMask& other) const;

  BitMask& operator&=(const BitMask& o);
  BitMask& operator|=(const BitMask& o);
  BitMask& operator^=(const BitMask& o);
  friend BitMask operator&(BitMask a, const BitMask& b) { return a &= b; }
  friend BitMask operator|(BitMask a, const BitMask& b) { return a |= b; }
  friend BitMask operator^(BitMask a, const BitMask& b) { return a ^= b; }

  friend bool operator==(const BitMask&, const BitMask&) = default;
  // Lexicographic on (b0, b1, ...); shorter masks order first on a tie.
  friend std::strong_ordering operator<=>(const BitMask& a, const BitMask& b);

  std::span<const uint64_t> words() const { return words_; }
  std::string to_string() const;

  template <int W>
  WordBits<W> to_fixed() const {
    WordBits<W> r;
    for (std::size_t k = 0; k < words_.size() && k < static_cast<std::size_t>(W); ++k)
      r.w[k] = words_[k];
    return r;
  }
  template <int W>
  static BitMask from_fixed(const WordBits<W>& bits, std::size_t len) {
    BitMask r(len);
    for (std::size_t k = 0; k < r.words_.size() && k < static_cast<std::size_t>(W); ++k)
      r.words_[k] = bits.w[k];
    r.trim();
    return r;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      uint64_t v = words_[k];
      while (v) {
        f(64 * k + static_cast<std::size_t>(__builtin_ctzll(v)));
        v &= v - 1;
      }
    }
  }

  std::size_t hash() const;

 private:
  void trim();

  std::vector<uint64_t> words_;
  std::size_t len_ = 0;
};

struct BitMaskHash {
  std::size_t operator()(const BitMask& m) const { return m.hash(); }
};

}  // namespace ramsey
