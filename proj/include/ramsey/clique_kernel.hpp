#pragma once

// Fixed-width clique search kernels. A link mask x has bit i set when
// distance i+1 carries the color of interest; vertex v >= 1 is identified with
// link bit v-1 (the link from vertex 0 to v). All searches are rooted at
// vertex 0 and the "top" vertex B = b+1.

#include <vector>

#include "ramsey/word_bits.hpp"

namespace ramsey::kernel {

// Links n' with |n' - n| - 1 in x: the vertices that close a triangle with
// the link (0, n+1). xr must be x.reversed().
template <int W>
inline WordBits<W> invert(const WordBits<W>& x, const WordBits<W>& xr, int n) {
  return xr.shr(WordBits<W>::kCapacity - n) | x.shl(n + 1);
}

// Computes invert() from the live masks; used while a coloring is growing.
template <int W>
struct LiveInvert {
  const WordBits<W>* x;
  const WordBits<W>* xr;
  WordBits<W> operator()(int n) const { return invert(*x, *xr, n); }
};

// invert() for every link of a fixed coloring, computed once.
template <int W>
class InvertCache {
 public:
  InvertCache() = default;
  InvertCache(const WordBits<W>& x, int len) : table_(static_cast<std::size_t>(len)) {
    const WordBits<W> xr = x.reversed();
    const WordBits<W> mask = WordBits<W>::low(len);
    for (int n = 0; n < len; ++n) table_[static_cast<std::size_t>(n)] = invert(x, xr, n) & mask;
  }
  const WordBits<W>& operator()(int n) const { return table_[static_cast<std::size_t>(n)]; }

 private:
  std::vector<WordBits<W>> table_;
};

// Is there a clique of order >= L containing 0 and B = b+1 whose other
// vertices come from `cand` (already restricted to neighbours of 0 and B)?
// Picks are made in decreasing order. With `mirror` set every candidate must
// lie below B, and the search skips any branch whose first floor((L-3)/2)
// picks fall below B/2: one of each clique and its reflection
// (0, B-y_{n-1}, ..., B) keeps that many vertices in the upper half.
// When `picks` is given it receives the link bits of the clique found.
template <int W, class Inv>
bool exists_rec(const Inv& inv, int B, WordBits<W> cand, int ord, int depth, int L, bool mirror, uint64_t& visits,
                std::vector<int>* picks = nullptr) {
  if (ord >= L) return true;
  const int mirror_depth = (L - 3) / 2;
  while (true) {
    const int left = cand.count();
    if (ord + left < L) return false;
    const int n = cand.highest();
    cand.reset(n);
    if (mirror && depth <= mirror_depth && 2 * (n + 1) < B) return false;
    ++visits;
    const WordBits<W> next = cand & inv(n);
    if (picks) picks->push_back(n);
    if (exists_rec<W>(inv, B, next, ord + 1, depth + 1, L, mirror, visits, picks)) return true;
    if (picks) picks->pop_back();
  }
}

template <int W, class Inv>
bool clique_through(const Inv& inv, int b, const WordBits<W>& x, int L, bool mirror, uint64_t& visits,
                    std::vector<int>* picks = nullptr) {
  if (L <= 2) return true;
  const WordBits<W> cand = x & inv(b) & WordBits<W>::low(b);
  return exists_rec<W>(inv, b + 1, cand, 2, 0, L, mirror, visits, picks);
}

// Variant for cyclic colorings of order N: only cliques whose widest cyclic
// gap is the last one (N - B) are searched, so every gap between consecutive
// vertices is at most g = N - B and the smallest vertex is at most g.
template <int W, class Inv>
bool exists_cyclic_rec(const Inv& inv, int B, int g, WordBits<W> cand, int prev, int ord, int depth, int L,
                       uint64_t& visits) {
  const int mirror_depth = (L - 3) / 2;
  while (cand.any()) {
    const int left = cand.count();
    if (ord + left < L) return false;
    const int n = cand.highest();
    cand.reset(n);
    const int v = n + 1;
    if (prev - v > g) return false;
    if (depth <= mirror_depth && 2 * v < B) return false;
    ++visits;
    if (ord + 1 >= L && v <= g) return true;
    const WordBits<W> next = cand & inv(n);
    if (exists_cyclic_rec<W>(inv, B, g, next, v, ord + 1, depth + 1, L, visits)) return true;
  }
  return false;
}

// Does a cyclic coloring with `len` links have a clique of order >= L in the
// color whose links are `x`? Any such clique has an L-vertex subclique;
// rotating that one so its widest gap is last gives L * (N - B) >= N.
template <int W, class Inv>
bool has_cyclic_clique(const Inv& inv, const WordBits<W>& x, int len, int L, uint64_t& visits) {
  const int order = len + 1;
  if (L <= 1) return true;
  if (L == 2) return x.any();
  for (int B = L - 1; B < order; ++B) {
    const int g = order - B;
    if (L * g < order) break;
    const int b = B - 1;
    if (!x.test(b)) continue;
    const WordBits<W> cand = x & inv(b) & WordBits<W>::low(b);
    if (exists_cyclic_rec<W>(inv, B, g, cand, B, 2, 0, L, visits)) return true;
  }
  return false;
}

// Exact clique number of one color of a complete coloring with `len` links.
// `x` holds the links of that color.
template <int W>
int clique_number(const WordBits<W>& x, int len, bool cyclic, uint64_t& visits) {
  const int order = len + 1;
  if (x.none()) return 1;
  const InvertCache<W> inv(x, len);
  int best = 2;
  for (int L = 3; L <= order; ++L) {
    bool found = false;
    if (cyclic) {
      found = has_cyclic_clique<W>(inv, x, len, L, visits);
    } else {
      for (int B = L - 1; B < order && !found; ++B) {
        const int b = B - 1;
        if (!x.test(b)) continue;
        found = clique_through<W>(inv, b, x, L, true, visits);
      }
    }
    if (!found) break;
    best = L;
  }
  return best;
}

// Calls f(picks) for every clique containing 0 and B whose other vertices
// come from `cand`; picks holds their link bits (vertex - 1) in decreasing
// order, so the clique order is picks.size() + 2. Only cliques of order
// >= min_order are passed on.
template <int W, class Inv, class F>
void for_each_clique_rec(const Inv& inv, WordBits<W> cand, std::vector<int>& picks, int min_order, F& f) {
  while (cand.any()) {
    const int n = cand.highest();
    cand.reset(n);
    picks.push_back(n);
    if (static_cast<int>(picks.size()) + 2 >= min_order) f(picks);
    for_each_clique_rec<W>(inv, cand & inv(n), picks, min_order, f);
    picks.pop_back();
  }
}

}  // namespace ramsey::kernel
