#include "ramsey/cyclic_search.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <random>
#include <set>
#include <unordered_set>

#include "ramsey/clique_kernel.hpp"
#include "ramsey/errors.hpp"

namespace ramsey {

SymmetricMask::SymmetricMask(BitMask bits) : bits_(std::move(bits)) {
  const std::size_t n = bits_.size();
  for (std::size_t i = 0; 2 * i + 1 < n; ++i)
    if (bits_.test(i) != bits_.test(n - 1 - i)) throw UsageError("mask is not symmetric");
}

SymmetricMask SymmetricMask::from_coloring(const DistanceColoring& c) {
  if (!c.complete()) throw UsageError("coloring is incomplete");
  return SymmetricMask(c.colors());
}

SymmetricMask bit_flip(const SymmetricMask& m, int a) {
  const int n = m.size();
  if (a < 0 || 2 * a > n || a >= n) throw UsageError("flip site out of range");
  BitMask b = m.bits();
  b.flip(static_cast<std::size_t>(a));
  if (n - 1 - a != a) b.flip(static_cast<std::size_t>(n - 1 - a));
  return SymmetricMask(std::move(b));
}

SymmetricMask reflect(const SymmetricMask& m, int n_prime) {
  const int h = (n_prime + 1) / 2, fl = n_prime / 2;
  if (n_prime == m.size()) throw UsageError("reflection to the same length");
  if (n_prime < 2 || h > m.size()) throw UsageError("reflection length out of range");
  BitMask b(static_cast<std::size_t>(n_prime));
  for (int i = 0; i < h; ++i) b.set(static_cast<std::size_t>(i), m.bits().test(static_cast<std::size_t>(i)));
  for (int t = 0; t < fl; ++t)
    b.set(static_cast<std::size_t>(h + t), m.bits().test(static_cast<std::size_t>(m.size() - fl + t)));
  return SymmetricMask(std::move(b));
}

std::vector<int> flip_site_scores(const DistanceColoring& c) {
  if (!c.complete() || !is_cyclic(c)) throw UsageError("flip_site_scores needs a complete cyclic coloring");
  const int n = c.link_count();
  std::vector<int> scores(static_cast<std::size_t>((n + 1) / 2), 0);
  std::vector<int> col(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) col[static_cast<std::size_t>(i)] = c.colors().test(static_cast<std::size_t>(i));
  for (int a = 0; 2 * a <= n - 1; ++a) {
    const int a2 = n - 1 - a;
    const int nc = 1 - col[static_cast<std::size_t>(a)];
    auto color = [&](int bit) { return (bit == a || bit == a2) ? nc : col[static_cast<std::size_t>(bit)]; };
    int count = 0;
    for (int u = 1; u <= n; ++u)
      for (int v = u + 1; v <= n; ++v) {
        const int b1 = u - 1, b2 = v - u - 1, b3 = v - 1;
        const bool touches = b1 == a || b1 == a2 || b2 == a || b2 == a2 || b3 == a || b3 == a2;
        if (touches && color(b1) == nc && color(b2) == nc && color(b3) == nc) ++count;
      }
    scores[static_cast<std::size_t>(a)] = count;
  }
  return scores;
}

namespace {

template <int W>
using Bits = WordBits<W>;

template <int W>
Bits<W> reflect_w(const Bits<W>& x, int n2) {
  const int h = (n2 + 1) / 2, fl = n2 / 2;
  const Bits<W> rev = (x & Bits<W>::low(fl)).reversed().shr(Bits<W>::kCapacity - n2);
  return (x & Bits<W>::low(h)) | rev;
}

template <int W>
Bits<W> flip_w(Bits<W> x, int n, int a) {
  x.flip(a);
  if (n - 1 - a != a) x.flip(n - 1 - a);
  return x;
}

template <int W>
Bits<W> relabel_w(const Bits<W>& x, int n, int M) {
  const int N = n + 1;
  Bits<W> r;
  for (int i = 0; i < n; ++i) {
    const int d = static_cast<int>((static_cast<long>(M) * (i + 1)) % N);
    if (x.test(d - 1)) r.set(i);
  }
  return r;
}

template <int W>
bool valid_w(const Bits<W>& x, int n, int k, int j) {
  const Bits<W> c1 = x & Bits<W>::low(n);
  const Bits<W> c0 = Bits<W>::low(n).andnot(x);
  uint64_t visits = 0;
  const kernel::InvertCache<W> i0(c0, n);
  if (kernel::has_cyclic_clique<W>(i0, c0, n, k, visits)) return false;
  const kernel::InvertCache<W> i1(c1, n);
  return !kernel::has_cyclic_clique<W>(i1, c1, n, j, visits);
}

template <int W>
struct PrevetW {
  struct Entry {
    int color;
    int site;
    int upper;  // distances above order/2
    Bits<W> mask;
  };
  std::vector<Entry> cliques;
  std::vector<bool> skip_site;

  bool rejects(const Bits<W>& x, int n2) const {
    const Bits<W> c1 = x & Bits<W>::low(n2);
    const Bits<W> c0 = Bits<W>::low(n2).andnot(x);
    for (const auto& e : cliques)
      if ((e.color ? c1 : c0).contains(e.mask)) return true;
    return false;
  }
};

constexpr int kPerSiteCliques = 64;
constexpr uint64_t kPerSiteVisits = 20000;

template <int W>
PrevetW<W> build_prevet_w(const Bits<W>& x, int n, int k, int j, std::size_t keep) {
  PrevetW<W> p;
  const int order = n + 1;
  p.skip_site.assign(static_cast<std::size_t>((n + 1) / 2), false);
  const Bits<W> all = Bits<W>::low(n);
  for (int color = 0; color < 2; ++color) {
    const int K = color ? j : k;
    const Bits<W> xc = color ? (x & all) : all.andnot(x);
    for (int a = 0; 2 * a <= n - 1; ++a) {
      if (xc.test(a)) continue;
      const Bits<W> xf = flip_w<W>(xc, n, a);
      const Bits<W> xfr = xf.reversed();
      const kernel::LiveInvert<W> inv{&xf, &xfr};
      int found = 0;
      uint64_t visits = 0;
      std::vector<int> picks;
      auto rec = [&](auto&& self, Bits<W> cand, int ord) -> void {
        if (ord >= K) {
          typename PrevetW<W>::Entry e{color, a, 0, Bits<W>{}};
          std::vector<int> vs{0, a + 1};
          for (int v : picks) vs.push_back(v + 1);
          std::sort(vs.begin(), vs.end());
          for (std::size_t s = 0; s < vs.size(); ++s)
            for (std::size_t t = s + 1; t < vs.size(); ++t) e.mask.set(vs[t] - vs[s] - 1);
          e.upper = (e.mask.andnot(Bits<W>::low(order / 2))).count();
          if (vs.back() <= order / 2) p.skip_site[static_cast<std::size_t>(a)] = true;
          p.cliques.push_back(e);
          ++found;
          return;
        }
        while (cand.any() && found < kPerSiteCliques && visits < kPerSiteVisits) {
          if (ord + cand.count() < K) return;
          const int v = cand.highest();
          cand.reset(v);
          ++visits;
          picks.push_back(v);
          self(self, cand & inv(v), ord + 1);
          picks.pop_back();
        }
      };
      rec(rec, xf & inv(a) & all, 2);
    }
  }
  std::stable_sort(p.cliques.begin(), p.cliques.end(),
                   [](const auto& l, const auto& r) { return l.upper < r.upper; });
  if (p.cliques.size() > keep) p.cliques.resize(keep);
  return p;
}

template <int W>
struct Key {
  int n;
  Bits<W> x;
  friend bool operator==(const Key&, const Key&) = default;
};

template <int W>
struct KeyHash {
  std::size_t operator()(const Key<W>& key) const {
    uint64_t h = static_cast<uint64_t>(key.n) * 0x9e3779b97f4a7c15ULL;
    for (uint64_t v : key.x.w) h = (h ^ v) * 0x100000001b3ULL + (h >> 29);
    return static_cast<std::size_t>(h);
  }
};

template <int W>
class Searcher {
 public:
  Searcher(int k, int j, const CyclicSearchOptions& opts) : k_(k), j_(j), opts_(opts), rng_(opts.seed) {}

  CyclicSearchResult run(const std::vector<DistanceColoring>& seeds) {
    start_ = std::chrono::steady_clock::now();
    lmin_ = opts_.lmin;
    if (lmin_ <= 0) {
      lmin_ = seeds.front().order();
      for (const auto& s : seeds) lmin_ = std::min(lmin_, s.order());
    }
    for (const auto& s : seeds) {
      const Bits<W> x = s.colors().to_fixed<W>();
      const int n = s.link_count();
      tested_.insert(Key<W>{n, x});
      if (!valid_w<W>(x, n, k_, j_)) throw UsageError("seed is not a valid cyclic coloring");
      admit(n, x, /*front=*/false);
    }
    while (!done()) {
      if (pool_.empty()) {
        // Only random moves remain; every expanded coloring gets one more round.
        std::erase_if(expanded_, [&](const Key<W>& e) { return e.n + 1 < lmin_; });
        if (expanded_.empty()) break;
        const std::vector<Key<W>> round = expanded_;
        for (const auto& p : round) {
          if (done() || p.n + 1 < lmin_) break;
          const std::size_t before = res_.classes;
          random_step(p);
          note_yield(res_.classes > before);
        }
        if (opts_.fixed_lmin && opts_.stop_when_stalled && idle_ >= static_cast<uint64_t>(opts_.stall_step)) break;
        continue;
      }
      std::vector<Key<W>> batch;
      while (!pool_.empty() && static_cast<int>(batch.size()) < opts_.batch) {
        batch.push_back(pool_.front());
        pool_.pop_front();
      }
      bool any_new = false;
      for (const auto& p : batch) {
        if (done()) break;
        if (p.n + 1 < lmin_) continue;
        const std::size_t before = res_.classes;
        expand(p);
        expanded_.push_back(p);
        any_new |= res_.classes > before;
        note_yield(res_.classes > before);
      }
      if (!any_new && !done())
        for (const auto& p : batch)
          if (p.n + 1 >= lmin_) random_step(p);
      if (!opts_.fixed_lmin) lmin_ = std::max(lmin_, res_.best_order - opts_.window);
      std::erase_if(pool_, [&](const Key<W>& e) { return e.n + 1 < lmin_; });
    }
    res_.final_lmin = lmin_;
    res_.seconds = elapsed();
    return std::move(res_);
  }

 private:
  double elapsed() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }
  bool done() {
    if (halted_) return true;
    if (opts_.max_results && res_.colorings.size() >= opts_.max_results) halted_ = true;
    if ((res_.candidates & 0xff) == 0 && elapsed() > opts_.budget_seconds) halted_ = true;
    return halted_;
  }

  // Yield-less colorings raise lmin by one every stall_step; with a fixed
  // lmin the search ends after stall_step of them in a row, unless told to
  // keep going until the budget.
  void note_yield(bool yielded) {
    if (yielded) {
      idle_ = 0;
      return;
    }
    ++idle_;
    if (!opts_.fixed_lmin && idle_ % static_cast<uint64_t>(opts_.stall_step) == 0) ++lmin_;
  }

  void admit(int n, const Bits<W>& x, bool front) {
    const DistanceColoring c(n + 1, BitMask::from_fixed<W>(x, static_cast<std::size_t>(n)));
    if (!classes_.insert(canonical_form(c, false)).second) return;
    ++res_.classes;
    res_.best_order = std::max(res_.best_order, n + 1);
    if (front)
      pool_.push_front(Key<W>{n, x});
    else
      pool_.push_back(Key<W>{n, x});
    if (n + 1 < lmin_) return;
    if (opts_.expand_orbits) {
      for (int M : relabel_multipliers(n + 1)) {
        const Bits<W> y = relabel_w<W>(x, n, M);
        if (M != 1 && !valid_w<W>(y, n, k_, j_)) throw InternalError("relabeling broke validity");
        if (emitted_.insert(Key<W>{n, y}).second)
          res_.colorings.emplace_back(n + 1, BitMask::from_fixed<W>(y, static_cast<std::size_t>(n)));
      }
    } else if (emitted_.insert(Key<W>{n, x}).second) {
      res_.colorings.push_back(c);
    }
  }

  // Screens and checks one candidate; true when it was new and valid.
  bool attempt(int n2, const Bits<W>& x, const PrevetW<W>& pv) {
    ++res_.candidates;
    if (n2 + 1 < lmin_ || done()) return false;
    if (pv.rejects(x, n2)) {
      ++res_.prevet_rejected;
      return false;
    }
    if (!tested_.insert(Key<W>{n2, x}).second) return false;
    ++res_.checked;
    if (!valid_w<W>(x, n2, k_, j_)) return false;
    admit(n2, x, true);
    return true;
  }

  int max_links() const { return Bits<W>::kCapacity; }

  void expand(const Key<W>& p) {
    const int n = p.n;
    const PrevetW<W> pv = build_prevet_w<W>(p.x, n, k_, j_, opts_.prevet_keep);
    for (int a = 0; 2 * a <= n - 1 && !done(); ++a) {
      const Bits<W> x1 = flip_w<W>(p.x, n, a);
      attempt(n, x1, pv);
      for (int b = a + 1; 2 * b <= n - 1 && !done(); ++b) attempt(n, flip_w<W>(x1, n, b), pv);
    }
    const int lo = std::max(lmin_ - 1, 2);
    const int hi = std::min(n + opts_.window, max_links());
    for (int M : relabel_multipliers(n + 1)) {
      if (done()) return;
      const Bits<W> xm = M == 1 ? p.x : relabel_w<W>(p.x, n, M);
      const PrevetW<W> pm = M == 1 ? pv : build_prevet_w<W>(xm, n, k_, j_, opts_.prevet_keep);
      for (int n2 = lo; n2 <= hi && !done(); ++n2) {
        if (n2 == n || (n2 + 1) / 2 > n) continue;
        const Bits<W> r = reflect_w<W>(xm, n2);
        attempt(n2, r, pm);
        for (int a = 0; 2 * a <= n2 - 1 && !done(); ++a) {
          const Bits<W> r1 = flip_w<W>(r, n2, a);
          attempt(n2, r1, pm);
          if (opts_.reflect_flips < 2) continue;
          for (int b = a + 1; 2 * b <= n2 - 1 && !done(); ++b) attempt(n2, flip_w<W>(r1, n2, b), pm);
        }
      }
    }
  }

  void random_step(const Key<W>& p) {
    const int n = p.n;
    const PrevetW<W> pv = build_prevet_w<W>(p.x, n, k_, j_, opts_.prevet_keep);
    const int lo = std::max(lmin_ - 1, 2);
    const int hi = std::min(n + opts_.window, max_links());
    const int rounds = 10;
    for (int round = 0; round < rounds && !done(); ++round) {
      int n2 = n;
      if (lo <= hi) n2 = std::uniform_int_distribution<int>(lo, hi)(rng_);
      if ((n2 + 1) / 2 > n) n2 = n;
      const Bits<W> r = n2 == n ? p.x : reflect_w<W>(p.x, n2);
      const DistanceColoring rc(n2 + 1, BitMask::from_fixed<W>(r, static_cast<std::size_t>(n2)));
      const std::vector<int> scores = flip_site_scores(rc);
      std::vector<int> sites;
      for (int a = 0; a < static_cast<int>(scores.size()); ++a) {
        const bool skip = a < static_cast<int>(pv.skip_site.size()) && 2 * a < n2 && pv.skip_site[static_cast<std::size_t>(a)];
        if (!skip) sites.push_back(a);
      }
      if (sites.size() < 2) continue;
      std::stable_sort(sites.begin(), sites.end(), [&](int l, int r2) {
        return scores[static_cast<std::size_t>(l)] < scores[static_cast<std::size_t>(r2)];
      });
      const int span_lo = std::max(2, (n2 + 1) / 10), span_hi = std::max(span_lo, (n2 + 1) / 5);
      const int span = std::min<int>(static_cast<int>(sites.size()),
                                     std::uniform_int_distribution<int>(span_lo, span_hi)(rng_));
      std::uniform_int_distribution<int> pick(0, span - 1);
      for (int t = 0; t < opts_.random_tries / rounds && !done(); ++t) {
        const int flips = std::uniform_int_distribution<int>(2, 3)(rng_);
        Bits<W> y = r;
        std::set<int> used;
        while (static_cast<int>(used.size()) < std::min(flips, span)) used.insert(sites[static_cast<std::size_t>(pick(rng_))]);
        for (int a : used) y = flip_w<W>(y, n2, a);
        attempt(n2, y, pv);
      }
    }
  }

  int k_, j_;
  CyclicSearchOptions opts_;
  std::mt19937_64 rng_;
  std::chrono::steady_clock::time_point start_;
  int lmin_ = 0;
  uint64_t idle_ = 0;
  bool halted_ = false;
  std::deque<Key<W>> pool_;
  std::vector<Key<W>> expanded_;
  std::unordered_set<Key<W>, KeyHash<W>> tested_, emitted_;
  std::set<BitMask> classes_;
  CyclicSearchResult res_;
};

}  // namespace

Prevet build_prevet(const DistanceColoring& c, int k, int j, std::size_t keep) {
  if (!c.complete() || !is_cyclic(c)) throw UsageError("build_prevet needs a complete cyclic coloring");
  const int n = c.link_count();
  if (n > kMaxLinkBits) throw UsageError("coloring too large");
  Prevet out;
  out.links = n;
  dispatch_width(n, [&]<int W>() {
    const PrevetW<W> p = build_prevet_w<W>(c.colors().to_fixed<W>(), n, k, j, keep);
    for (const auto& e : p.cliques)
      out.cliques.push_back({e.color, e.site, BitMask::from_fixed<W>(e.mask, static_cast<std::size_t>(n))});
    out.skip_site = p.skip_site;
  });
  return out;
}

bool prevet_rejects(const Prevet& p, const DistanceColoring& candidate) {
  if (!candidate.complete()) throw UsageError("candidate is incomplete");
  const std::size_t n2 = static_cast<std::size_t>(candidate.link_count());
  for (const auto& e : p.cliques) {
    bool all = true;
    e.links.for_each([&](std::size_t i) {
      if (all && (i >= n2 || candidate.colors().test(i) != (e.color == 1))) all = false;
    });
    if (all) return true;
  }
  return false;
}

CyclicSearchResult cyclic_local_search(const std::vector<DistanceColoring>& seeds, int k, int j,
                                       const CyclicSearchOptions& opts) {
  if (seeds.empty()) return {};
  if (k < 2 || j < 2) throw UsageError("clique orders must be at least 2");
  if (opts.batch < 1 || opts.window < 0 || opts.stall_step < 1) throw UsageError("bad search options");
  int top = 0;
  for (const auto& s : seeds) {
    if (!s.complete() || !is_cyclic(s)) throw UsageError("seeds must be complete cyclic colorings");
    top = std::max(top, s.link_count());
  }
  const int need = top + opts.window;
  if (width_for(top) == 0) throw UsageError("seed too large");
  return dispatch_width(std::min(need, kMaxLinkBits), [&]<int W>() {
    Searcher<W> s(k, j, opts);
    return s.run(seeds);
  });
}

}  // namespace ramsey
