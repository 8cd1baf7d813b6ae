#pragma once

// Depth-first growth of distance colorings, one link at a time in increasing
// order. Links may be assigned ahead of the growing prefix (forced links and
// out-of-order branches); each is checked for cliques when the prefix reaches
// it, so every visited prefix is a valid coloring.

#include <array>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <vector>

#include "ramsey/bitmask.hpp"
#include "ramsey/propagation_kernel.hpp"

namespace ramsey {

struct DfsConfig {
  std::array<int, 2> K{3, 3};  // forbidden clique order per color
  int d = 3;
  int max_links = 64;        // prefixes never grow past this many links
  int count_above = 1;       // only orders > count_above are counted
  int store_from = 0;        // keep colorings of this order and up (0: none)
  bool reflect = false;      // link 0 fixed to color 0
  bool forcing = true;
  bool lookahead = true;     // closure check and out-of-order branching below d
  bool out_of_order = true;
  int lookahead_every = 5;
  int lookahead_from = 0;    // no look-ahead while the prefix is shorter
  int max_gap = 2;
  uint64_t threshold = UINT64_MAX;
  bool stop_at_d = false;
  const std::atomic<bool>* stop = nullptr;
  std::chrono::steady_clock::time_point deadline = std::chrono::steady_clock::time_point::max();
};

struct DfsResult {
  std::vector<uint64_t> counts;  // by order
  int longest = 0;
  bool reached_d = false;
  bool aborted = false;    // threshold exceeded
  bool truncated = false;  // a prefix hit max_links
  bool stopped = false;    // deadline or external stop
  uint64_t tests = 0;
  std::vector<BitMask> colorings;
};

template <int W>
class Dfs {
 public:
  using Bits = WordBits<W>;
  using Masks = kernel::Masks<W>;

  explicit Dfs(const DfsConfig& cfg) : cfg_(cfg) {
    res_.counts.assign(static_cast<std::size_t>(cfg.max_links) + 2, 0);
  }

  // Grows from the empty prefix; links set in `ahead` are fixed beforehand.
  DfsResult run(const Masks& ahead) {
    State s{ahead, cfg_.max_links};
    node(s, 0);
    return std::move(res_);
  }

 private:
  struct State {
    Masks m;
    int limit;  // links at or above this index are never added
  };

  void node(State& s, int pos) {
    if (halted_) return;
    if (pos >= 1) visit(s, pos);
    if (halted_ || pos >= s.limit) return;
    if (cfg_.lookahead && pos + 1 < cfg_.d && pos >= cfg_.lookahead_from &&
        (pos - cfg_.lookahead_from) % cfg_.lookahead_every == 0) {
      const auto recs = kernel::collect_gaps<W>(s.m, cfg_.d, cfg_.K, cfg_.max_gap, kernel::GapLimits{});
      const Bits open = Bits::low(cfg_.d - 1).andnot(s.m.assigned());
      const auto cl = kernel::implication_closure<W>(recs, open, cfg_.d - 1);
      if (cl.verdict == kernel::Extension::kContradiction) return;
      for (const auto& [link, col] : cl.forced) s.m.assign(link, col);
      if (cfg_.out_of_order && cl.verdict == kernel::Extension::kExtensible) {
        const Bits still = open.andnot(s.m.assigned());
        int best = -1, best_n = 0;
        still.for_each([&](int p) {
          if (cl.pair_counts[static_cast<std::size_t>(p)] > best_n) {
            best = p;
            best_n = cl.pair_counts[static_cast<std::size_t>(p)];
          }
        });
        if (best > pos) {
          for (int c = 0; c < 2 && !halted_; ++c) {
            State t = s;
            t.m.assign(best, c);
            extend(t, pos);
          }
          return;
        }
      }
    }
    extend(s, pos);
  }

  void extend(const State& s, int pos) {
    const bool preset = s.m.assigned().test(pos);
    int colors[2] = {0, 1};
    int n = 2;
    if (preset) {
      colors[0] = s.m.x[1].test(pos) ? 1 : 0;
      n = 1;
    } else if (cfg_.reflect && pos == 0) {
      n = 1;
    }
    for (int i = 0; i < n; ++i) {
      const int c = colors[i];
      if (++res_.tests > cfg_.threshold) {
        res_.aborted = true;
        halted_ = true;
        return;
      }
      if ((res_.tests & 0xfff) == 0 && poll_stop()) return;
      State t = s;
      if (!preset) t.m.assign(pos, c);
      uint64_t visits = 0;
      if (kernel::clique_through<W>(t.m.inv(c), pos, t.m.x[c], cfg_.K[c], true, visits)) continue;
      if (cfg_.forcing) force(t, pos, c);
      node(t, pos + 1);
      if (halted_) return;
    }
  }

  // Assigns the links forced by link b = c; a forced link that already has
  // color c closes a forbidden clique, which caps the subtree below it.
  void force(State& t, int b, int c) {
    const Bits range = Bits::low(t.limit).andnot(Bits::low(b + 1));
    const Bits hit = kernel::forced_hits<W>(t.m, b, c, cfg_.K[c], range);
    if (hit.none()) return;
    const int clash = (hit & t.m.x[c]).lowest();
    if (clash >= 0) t.limit = clash;
    const Bits fresh = (hit & Bits::low(t.limit)).andnot(t.m.assigned());
    fresh.for_each([&](int w) { t.m.assign(w, 1 - c); });
  }

  void visit(const State& s, int pos) {
    const int order = pos + 1;
    if (pos >= cfg_.max_links) res_.truncated = true;
    if (order <= cfg_.count_above) return;
    ++res_.counts[static_cast<std::size_t>(order)];
    if (order > res_.longest) res_.longest = order;
    if (cfg_.store_from > 0 && order >= cfg_.store_from)
      res_.colorings.push_back(BitMask::from_fixed<W>(s.m.x[1] & Bits::low(pos), static_cast<std::size_t>(pos)));
    if (order >= cfg_.d) {
      res_.reached_d = true;
      if (cfg_.stop_at_d) halted_ = true;
    }
  }

  bool poll_stop() {
    if ((cfg_.stop && cfg_.stop->load(std::memory_order_relaxed)) ||
        std::chrono::steady_clock::now() >= cfg_.deadline) {
      res_.stopped = true;
      halted_ = true;
    }
    return halted_;
  }

  const DfsConfig& cfg_;
  DfsResult res_;
  bool halted_ = false;
};

}  // namespace ramsey
