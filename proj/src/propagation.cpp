#include "ramsey/propagation.hpp"

#include <algorithm>

#include "ramsey/errors.hpp"
#include "ramsey/propagation_kernel.hpp"

namespace ramsey {
namespace {

template <int W>
kernel::Masks<W> load_masks(const DistanceColoring& c, int limit) {
  kernel::Masks<W> m;
  for (int i = 0; i < c.link_count() && i < limit; ++i)
    if (const auto col = c.bit(i)) m.assign(i, *col);
  return m;
}

void check_links(int links) {
  if (links > kMaxLinkBits) throw UsageError("colorings above order " + std::to_string(kMaxLinkBits + 1) +
                                             " are not supported");
}

}  // namespace

ForcedLinks forced_links(const DistanceColoring& c, int b, int color, const SearchParams& params) {
  if (b < 0 || b >= c.link_count()) throw UsageError("link index out of range");
  const int links = c.link_count();
  check_links(links);
  ForcedLinks out;
  dispatch_width(links, [&]<int W>() {
    kernel::Masks<W> m = load_masks<W>(c.with(b, color), links);
    WordBits<W> range = WordBits<W>::low(links);
    range.reset(b);
    const int K = params.forbidden_order(color);
    WordBits<W> hit = kernel::forced_hits<W>(m, b, color, K, range);
    // Below b a clique through vertex w+1 can also use link w between two of
    // its other vertices; retry each open link with w colored in.
    WordBits<W>::low(b).andnot(m.assigned() | hit).for_each([&](int w) {
      kernel::Masks<W> mw = m;
      mw.assign(w, color);
      const auto inv = mw.inv(color);
      if (!inv(b).test(w)) return;
      WordBits<W> cand = mw.x[color] & inv(b) & inv(w) & WordBits<W>::low(b);
      cand.reset(w);
      uint64_t visits = 0;
      if (kernel::exists_rec<W>(inv, b + 1, cand, 3, 0, K, false, visits)) hit.set(w);
    });
    if ((hit & m.x[color]).any()) out.contradiction = true;
    const WordBits<W> open = hit.andnot(m.assigned());
    open.for_each([&](int w) { out.links.push_back(ForcedLink{w, 1 - color}); });
  });
  return out;
}

std::vector<IncompleteClique> incomplete_cliques(const DistanceColoring& c, const SearchParams& params, int max_gap) {
  if (max_gap != 2 && max_gap != 3) throw UsageError("max_gap must be 2 or 3");
  const int links = std::max(params.d - 1, c.link_count());
  check_links(links);
  std::vector<IncompleteClique> out;
  dispatch_width(links, [&]<int W>() {
    const kernel::Masks<W> m = load_masks<W>(c, params.d - 1);
    std::vector<std::vector<int>> bases;
    const auto recs = kernel::collect_gaps<W>(m, params.d, {params.k, params.j}, max_gap, kernel::GapLimits{}, &bases);
    for (std::size_t i = 0; i < recs.size(); ++i) {
      IncompleteClique ic;
      ic.color = recs[i].color;
      ic.vertices = BitMask(static_cast<std::size_t>(params.d));
      ic.vertices.set(0);
      for (int v : bases[i]) ic.vertices.set(static_cast<std::size_t>(v + 1));
      for (int g = 0; g < recs[i].size; ++g) {
        const int mlink = recs[i].missing[static_cast<std::size_t>(g)];
        ic.missing.push_back(mlink);
        ic.vertices.set(static_cast<std::size_t>(mlink + 1));
      }
      out.push_back(std::move(ic));
    }
  });
  return out;
}

Extensibility extensibility_check(const DistanceColoring& c, const SearchParams& params, int max_gap) {
  if (params.d < 3) throw UsageError("extensibility_check needs d >= 3");
  const int links = std::max(params.d - 1, c.link_count());
  check_links(links);
  Extensibility out;
  dispatch_width(links, [&]<int W>() {
    const kernel::Masks<W> m = load_masks<W>(c, params.d - 1);
    const auto recs = kernel::collect_gaps<W>(m, params.d, {params.k, params.j}, max_gap, kernel::GapLimits{});
    const WordBits<W> open = WordBits<W>::low(params.d - 1).andnot(m.assigned());
    const auto res = kernel::implication_closure<W>(recs, open, params.d - 1);
    out.verdict = static_cast<ExtensionVerdict>(res.verdict);
    for (const auto& [link, col] : res.forced) out.forced.push_back(ForcedLink{link, col});
    std::sort(out.forced.begin(), out.forced.end());
    out.pair_counts = res.pair_counts;
  });
  return out;
}

int pick_branch_link(const DistanceColoring& c, const std::vector<int>& pair_counts, int d) {
  int best = -1;
  int best_count = -1;
  for (int i = 0; i < d - 1; ++i) {
    if (i < c.link_count() && c.bit(i)) continue;
    const int n = i < static_cast<int>(pair_counts.size()) ? pair_counts[static_cast<std::size_t>(i)] : 0;
    if (n > best_count) {
      best = i;
      best_count = n;
    }
  }
  if (best < 0) throw UsageError("pick_branch_link: no uncolored link below d-1");
  return best;
}

}  // namespace ramsey
