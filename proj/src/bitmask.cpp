#include "ramsey/bitmask.hpp"

#include <algorithm>
#include <bit>

#include "ramsey/errors.hpp"

namespace ramsey {

BitMask BitMask::from_string(std::string_view bits) {
  BitMask r(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1')
      r.set(i);
    else if (bits[i] != '0')
      throw UsageError("bit string may only contain '0' and '1'");
  }
  return r;
}

BitMask BitMask::ones(std::size_t len) {
  BitMask r(len);
  std::fill(r.words_.begin(), r.words_.end(), ~uint64_t{0});
  r.trim();
  return r;
}

void BitMask::trim() {
  if (len_ % 64 != 0 && !words_.empty()) words_.back() &= (uint64_t{1} << (len_ % 64)) - 1;
}

std::size_t BitMask::count() const {
  std::size_t n = 0;
  for (uint64_t w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool BitMask::none() const {
  return std::all_of(words_.begin(), words_.end(), [](uint64_t w) { return w == 0; });
}

std::optional<std::size_t> BitMask::lowest() const {
  for (std::size_t k = 0; k < words_.size(); ++k)
    if (words_[k]) return 64 * k + static_cast<std::size_t>(std::countr_zero(words_[k]));
  return std::nullopt;
}

std::optional<std::size_t> BitMask::highest() const {
  for (std::size_t k = words_.size(); k-- > 0;)
    if (words_[k]) return 64 * k + 63 - static_cast<std::size_t>(std::countl_zero(words_[k]));
  return std::nullopt;
}

BitMask BitMask::resized(std::size_t len) const {
  BitMask r(len);
  const std::size_t n = std::min(r.words_.size(), words_.size());
  std::copy_n(words_.begin(), n, r.words_.begin());
  r.trim();
  return r;
}

BitMask BitMask::complement() const {
  BitMask r = *this;
  for (uint64_t& w : r.words_) w = ~w;
  r.trim();
  return r;
}

bool BitMask::is_subset_of(const BitMask& other) const {
  for (std::size_t k = 0; k < words_.size(); ++k) {
    const uint64_t o = k < other.words_.size() ? other.words_[k] : 0;
    if (words_[k] & ~o) return false;
  }
  return true;
}

BitMask& BitMask::operator&=(const BitMask& o) {
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= k < o.words_.size() ? o.words_[k] : 0;
  return *this;
}

BitMask& BitMask::operator|=(const BitMask& o) {
  for (std::size_t k = 0; k < words_.size() && k < o.words_.size(); ++k) words_[k] |= o.words_[k];
  trim();
  return *this;
}

BitMask& BitMask::operator^=(const BitMask& o) {
  for (std::size_t k = 0; k < words_.size() && k < o.words_.size(); ++k) words_[k] ^= o.words_[k];
  trim();
  return *this;
}

std::strong_ordering operator<=>(const BitMask& a, const BitMask& b) {
  const std::size_t n = std::min(a.words_.size(), b.words_.size());
  for (std::size_t k = 0; k < n; ++k) {
    const uint64_t diff = a.words_[k] ^ b.words_[k];
    if (diff) {
      // The lowest differing bit decides; the mask with a 0 there is smaller.
      const uint64_t bit = diff & (~diff + 1);
      return (a.words_[k] & bit) ? std::strong_ordering::greater : std::strong_ordering::less;
    }
  }
  if (a.len_ != b.len_) {
    // Equal on the common words; compare any remaining bits of the longer one.
    const BitMask& longer = a.len_ > b.len_ ? a : b;
    for (std::size_t k = n; k < longer.words_.size(); ++k)
      if (longer.words_[k]) return &longer == &a ? std::strong_ordering::greater : std::strong_ordering::less;
    return a.len_ <=> b.len_;
  }
  return std::strong_ordering::equal;
}

std::string BitMask::to_string() const {
  std::string s(len_, '0');
  for_each([&](std::size_t i) { s[i] = '1'; });
  return s;
}

std::size_t BitMask::hash() const {
  uint64_t h = 0x9E3779B97F4A7C15ULL ^ len_;
  for (uint64_t w : words_) {
    h ^= w + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
    h *= 0xBF58476D1CE4E5B9ULL;
  }
  return static_cast<std::size_t>(h ^ (h >> 31));
}

}  // namespace ramsey
