#pragma once

// Fixed-width propagation kernels shared by the public propagation API and
// the enumeration engine.

#include <array>
#include <utility>
#include <vector>

#include "ramsey/clique_kernel.hpp"

namespace ramsey::kernel {

// Link masks of a partial coloring; x[c] holds the links of color c.
template <int W>
struct Masks {
  std::array<WordBits<W>, 2> x{};
  std::array<WordBits<W>, 2> xr{};

  void assign(int link, int color) {
    x[color].set(link);
    xr[color].set(WordBits<W>::kCapacity - 1 - link);
  }
  WordBits<W> assigned() const { return x[0] | x[1]; }
  LiveInvert<W> inv(int color) const { return LiveInvert<W>{&x[color], &xr[color]}; }
};

// Walks the cliques {0, B} + picks with picks from `cand` (all below B) up to
// order K-1. `open` tracks vertices t whose link (0, t) is uncolored or has
// color c and whose links to B and to every pick have color c. At order K-1
// the surviving `open` vertices are or-ed into `hit`.
template <int W, class Inv>
void forced_rec(const Inv& inv, WordBits<W> cand, WordBits<W> open, int ord, int K, WordBits<W>& hit) {
  if (ord >= K - 1) {
    hit |= open;
    return;
  }
  while (cand.any() && open.any()) {
    if (ord + cand.count() < K - 1) return;
    const int n = cand.highest();
    cand.reset(n);
    const WordBits<W> in = inv(n);
    forced_rec<W>(inv, cand & in, open & in, ord + 1, K, hit);
  }
}

// Vertices t (as link bits t-1, restricted to `range`) for which a color-c
// clique of order K-1 through link b, with its other vertices below b+1, plus
// t would be a K-clique once link t-1 has color c. `range` excludes b.
template <int W>
WordBits<W> forced_hits(const Masks<W>& m, int b, int color, int K, const WordBits<W>& range) {
  const auto inv = m.inv(color);
  const WordBits<W> ib = inv(b);
  const WordBits<W> unassigned = WordBits<W>::low(WordBits<W>::kCapacity).andnot(m.assigned());
  const WordBits<W> open = (unassigned | m.x[color]) & ib & range;
  const WordBits<W> cand = m.x[color] & ib & WordBits<W>::low(b);
  WordBits<W> hit;
  forced_rec<W>(inv, cand, open, 2, K, hit);
  return hit;
}

// A color-c clique of order K that lacks exactly the links in `missing`
// (2 or 3 uncolored links from vertex 0).
struct GapRecord {
  int color = 0;
  int size = 0;
  std::array<int, 3> missing{};
};

struct GapLimits {
  int max_cliques = 4000;  // (K-2)-cliques visited per color
  int max_records = 20000;
};

// Collects 2-incomplete (and, when max_gap = 3, 3-incomplete) cliques whose
// vertices all lie below d. The list is not exhaustive once a limit is hit.
// `bases`, when given, receives the colored part of each record's clique as
// link bits (vertex 0 implied).
template <int W>
std::vector<GapRecord> collect_gaps(const Masks<W>& m, int d, const std::array<int, 2>& K, int max_gap,
                                    const GapLimits& lim, std::vector<std::vector<int>>* bases = nullptr) {
  std::vector<GapRecord> out;
  std::vector<int> picks;
  auto emit = [&](const GapRecord& r) {
    out.push_back(r);
    if (bases) bases->push_back(picks);
  };
  const int links = d - 1;
  const WordBits<W> in_range = WordBits<W>::low(links);
  const WordBits<W> uncolored = in_range & WordBits<W>::low(WordBits<W>::kCapacity).andnot(m.assigned());
  auto above = [&](int i) { return in_range.andnot(WordBits<W>::low(i + 1)); };
  auto full = [&] { return static_cast<int>(out.size()) >= lim.max_records; };
  for (int c = 0; c < 2; ++c) {
    const auto inv = m.inv(c);
    // Cliques contain vertex 0 and are grown from vertices 1..d-1; a pair
    // record extends a (K-2)-clique, a triple record a (K-3)-clique. `compat`
    // holds the uncolored links m whose vertex m+1 has color-c links to every
    // clique vertex other than 0.
    const int base2 = K[c] - 2;
    const int base3 = K[c] - 3;
    if (base2 < 1) continue;
    int visited = 0;
    auto rec = [&](auto&& self, WordBits<W> cand, WordBits<W> compat, int ord) -> void {
      if (visited >= lim.max_cliques || full()) return;
      ++visited;
      if (max_gap >= 3 && ord == base3) {
        compat.for_each([&](int m1) {
          const WordBits<W> p2 = compat & inv(m1) & above(m1);
          p2.for_each([&](int m2) {
            (p2 & inv(m2) & above(m2)).for_each([&](int m3) {
              if (!full()) emit(GapRecord{c, 3, {m1, m2, m3}});
            });
          });
        });
      }
      if (ord == base2) {
        compat.for_each([&](int m1) {
          (compat & inv(m1) & above(m1)).for_each([&](int m2) {
            if (!full()) emit(GapRecord{c, 2, {m1, m2, -1}});
          });
        });
        return;
      }
      while (cand.any()) {
        if (ord + cand.count() < base2) return;
        const int n = cand.highest();
        cand.reset(n);
        const WordBits<W> in = inv(n);
        picks.push_back(n);
        self(self, cand & in, compat & in, ord + 1);
        picks.pop_back();
      }
    };
    rec(rec, m.x[c] & in_range, uncolored, 1);
  }
  return out;
}

enum class Extension { kContradiction, kExtensible, kUnknown };

struct ClosureResult {
  Extension verdict = Extension::kUnknown;
  std::vector<std::pair<int, int>> forced;  // (link, color)
  std::vector<int> pair_counts;             // records touching each link
};

// Implication closure over the uncolored links below `links`. For link p,
// v[p][0] / v[p][1] are the links forced to 0 / 1 when p = 0, and v[p][2] /
// v[p][3] the same when p = 1. A 2-gap record {c, a, b} means a = c forces
// b = 1 - c. A 3-gap record turns into a pair once one of its links is forced
// to its color.
template <int W>
ClosureResult implication_closure(const std::vector<GapRecord>& recs, const WordBits<W>& open, int links) {
  ClosureResult res;
  res.pair_counts.assign(static_cast<std::size_t>(links), 0);
  for (const GapRecord& r : recs)
    for (int i = 0; i < r.size; ++i) ++res.pair_counts[static_cast<std::size_t>(r.missing[static_cast<std::size_t>(i)])];
  if (recs.empty()) return res;

  using Row = std::array<WordBits<W>, 4>;
  std::vector<Row> v(static_cast<std::size_t>(links));
  open.for_each([&](int i) {
    v[static_cast<std::size_t>(i)][0].set(i);
    v[static_cast<std::size_t>(i)][3].set(i);
  });
  auto add_pair = [&](int c, int a, int b) {
    v[static_cast<std::size_t>(a)][static_cast<std::size_t>(1 + c)].set(b);
    v[static_cast<std::size_t>(b)][static_cast<std::size_t>(1 + c)].set(a);
  };
  std::vector<const GapRecord*> triples;
  for (const GapRecord& r : recs) {
    if (r.size == 2)
      add_pair(r.color, r.missing[0], r.missing[1]);
    else
      triples.push_back(&r);
  }
  std::vector<char> triple_done(triples.size(), 0);

  WordBits<W> f0, f1;  // links known to be 0 / 1 in every extension
  auto contradiction = [&] {
    res.verdict = Extension::kContradiction;
    res.forced.clear();
    return res;
  };

  // Marks queued links as forced together with their consequences.
  auto drain = [&](std::vector<std::pair<int, int>>& fresh, bool& changed) {
    while (!fresh.empty()) {
      const auto [p, col] = fresh.back();
      fresh.pop_back();
      WordBits<W>& mine = col ? f1 : f0;
      if (mine.test(p)) continue;
      mine.set(p);
      changed = true;
      if (!open.test(p)) continue;
      const Row& vp = v[static_cast<std::size_t>(p)];
      (col ? vp[2] : vp[0]).andnot(f0).for_each([&](int q) { fresh.emplace_back(q, 0); });
      (col ? vp[3] : vp[1]).andnot(f1).for_each([&](int q) { fresh.emplace_back(q, 1); });
    }
  };

  while (true) {
    // Closure: everything implied by an implied link is implied as well.
    for (bool grew = true; grew;) {
      grew = false;
      open.for_each([&](int p) {
        if (f0.test(p) || f1.test(p)) return;
        Row& vp = v[static_cast<std::size_t>(p)];
        const Row before = vp;
        open.for_each([&](int i) {
          if (i == p) return;
          const Row& vi = v[static_cast<std::size_t>(i)];
          if (vp[0].test(i)) { vp[0] |= vi[0]; vp[1] |= vi[1]; }
          if (vp[1].test(i)) { vp[0] |= vi[2]; vp[1] |= vi[3]; }
          if (vp[2].test(i)) { vp[2] |= vi[0]; vp[3] |= vi[1]; }
          if (vp[3].test(i)) { vp[2] |= vi[2]; vp[3] |= vi[3]; }
        });
        if (!(vp == before)) grew = true;
      });
    }

    // Links that cannot take one of their colors.
    bool changed = false;
    std::vector<std::pair<int, int>> fresh;
    bool clash = false;
    open.for_each([&](int p) {
      if (clash || f0.test(p) || f1.test(p)) return;
      const Row& vp = v[static_cast<std::size_t>(p)];
      const bool no0 = (vp[0] & vp[1]).any() || (vp[0] & f1).any() || (vp[1] & f0).any();
      const bool no1 = (vp[2] & vp[3]).any() || (vp[2] & f1).any() || (vp[3] & f0).any();
      if (no0 && no1) clash = true;
      else if (no0) fresh.emplace_back(p, 1);
      else if (no1) fresh.emplace_back(p, 0);
    });
    if (clash) return contradiction();

    drain(fresh, changed);
    if ((f0 & f1).any()) return contradiction();

    // 3-gap records with a member forced to their color become pairs.
    for (std::size_t t = 0; t < triples.size(); ++t) {
      if (triple_done[t]) continue;
      const GapRecord& r = *triples[t];
      const WordBits<W>& same = r.color ? f1 : f0;
      const WordBits<W>& other = r.color ? f0 : f1;
      int hit = 0, rest[3], nrest = 0;
      bool dead = false;
      for (int i = 0; i < 3; ++i) {
        const int m = r.missing[static_cast<std::size_t>(i)];
        if (other.test(m)) dead = true;
        else if (same.test(m)) ++hit;
        else rest[nrest++] = m;
      }
      if (dead) { triple_done[t] = 1; continue; }
      if (hit == 3) return contradiction();
      if (hit == 2) {
        fresh.emplace_back(rest[0], 1 - r.color);
        triple_done[t] = 1;
      } else if (hit == 1) {
        add_pair(r.color, rest[0], rest[1]);
        triple_done[t] = 1;
        changed = true;
      }
    }
    drain(fresh, changed);
    if ((f0 & f1).any()) return contradiction();
    if (!changed) break;
  }

  res.verdict = Extension::kExtensible;
  f0.for_each([&](int p) { res.forced.emplace_back(p, 0); });
  f1.for_each([&](int p) { res.forced.emplace_back(p, 1); });
  return res;
}

}  // namespace ramsey::kernel
