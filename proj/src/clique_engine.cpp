#include "ramsey/clique_engine.hpp"

#include <algorithm>

#include "ramsey/clique_kernel.hpp"
#include "ramsey/errors.hpp"

namespace ramsey {
namespace {

template <int W>
WordBits<W> color_bits(const DistanceColoring& c, int color) {
  BitMask m = color ? c.colors() : (c.assigned() & c.colors().complement());
  return m.to_fixed<W>();
}

CliqueRecord make_record(int order, int b, const std::vector<int>& picks, int color) {
  CliqueRecord r;
  r.vertices = BitMask(static_cast<std::size_t>(order));
  r.vertices.set(0);
  r.vertices.set(static_cast<std::size_t>(b + 1));
  for (int n : picks) r.vertices.set(static_cast<std::size_t>(n + 1));
  r.color = color;
  r.order = static_cast<int>(picks.size()) + 2;
  return r;
}

void check_width(int links) {
  if (links > kMaxLinkBits) throw UsageError("colorings above order " + std::to_string(kMaxLinkBits + 1) +
                                             " are not supported");
}

}  // namespace

BitMask invert(const BitMask& x, int n) {
  if (n < 0) throw UsageError("invert: negative link index");
  BitMask y(x.size());
  x.for_each([&](std::size_t i) {
    const long lo = n - static_cast<long>(i) - 1;
    const std::size_t hi = static_cast<std::size_t>(n) + i + 1;
    if (lo >= 0) y.set(static_cast<std::size_t>(lo));
    if (hi < y.size()) y.set(hi);
  });
  return y;
}

std::vector<CliqueRecord> cliques_through_link(const DistanceColoring& c, int b, int color, int min_order) {
  if (b < 0 || b >= c.link_count()) throw UsageError("link index out of range");
  check_width(c.link_count());
  const DistanceColoring cc = c.with(b, color);
  min_order = std::max(min_order, 3);
  std::vector<CliqueRecord> out;
  dispatch_width(c.link_count(), [&]<int W>() {
    const WordBits<W> x = color_bits<W>(cc, color);
    const WordBits<W> xr = x.reversed();
    const kernel::LiveInvert<W> inv{&x, &xr};
    const WordBits<W> cand = x & inv(b) & WordBits<W>::low(b);
    std::vector<int> picks;
    auto emit = [&](const std::vector<int>& p) { out.push_back(make_record(c.order(), b, p, color)); };
    kernel::for_each_clique_rec<W>(inv, cand, picks, min_order, emit);
  });
  return out;
}

int max_clique_order(const DistanceColoring& c, int color) {
  if (!c.complete()) throw UsageError("max_clique_orders needs a complete coloring");
  check_width(c.link_count());
  const bool cyclic = is_cyclic(c);
  uint64_t visits = 0;
  return dispatch_width(c.link_count(), [&]<int W>() {
    return kernel::clique_number<W>(color_bits<W>(c, color), c.link_count(), cyclic, visits);
  });
}

CliqueOrders max_clique_orders(const DistanceColoring& c) {
  return CliqueOrders{max_clique_order(c, 0), max_clique_order(c, 1)};
}

bool has_clique(const DistanceColoring& c, int color, int L) {
  if (!c.complete()) throw UsageError("has_clique needs a complete coloring");
  check_width(c.link_count());
  if (L <= 1) return true;
  const bool cyclic = is_cyclic(c);
  const int n = c.link_count();
  return dispatch_width(n, [&]<int W>() {
    const WordBits<W> x = color_bits<W>(c, color);
    if (L == 2) return x.any();
    const kernel::InvertCache<W> inv(x, n);
    uint64_t visits = 0;
    if (cyclic) return kernel::has_cyclic_clique<W>(inv, x, n, L, visits);
    for (int b = L - 2; b < n; ++b)
      if (x.test(b) && kernel::clique_through<W>(inv, b, x, L, true, visits)) return true;
    return false;
  });
}

bool is_valid(const DistanceColoring& c, int k, int j) {
  if (c.complete()) return !has_clique(c, 0, k) && !has_clique(c, 1, j);
  return rebuild_scan(c, k, j).ok();
}

ScanResult rebuild_scan(const DistanceColoring& c, int k, int j) {
  check_width(c.link_count());
  ScanResult result;
  dispatch_width(c.link_count(), [&]<int W>() {
    WordBits<W> x[2], xr[2];
    const int limit[2] = {k, j};
    std::vector<int> picks;
    uint64_t visits = 0;
    for (int b = 0; b < c.link_count(); ++b) {
      const auto col = c.bit(b);
      if (!col) continue;
      x[*col].set(b);
      xr[*col].set(WordBits<W>::kCapacity - 1 - b);
      const kernel::LiveInvert<W> inv{&x[*col], &xr[*col]};
      picks.clear();
      if (kernel::clique_through<W>(inv, b, x[*col], limit[*col], true, visits, &picks)) {
        result.violation = make_record(c.order(), b, picks, *col);
        return;
      }
    }
  });
  return result;
}

}  // namespace ramsey
