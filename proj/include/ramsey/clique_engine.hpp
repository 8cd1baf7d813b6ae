#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ramsey/bitmask.hpp"
#include "ramsey/coloring.hpp"

namespace ramsey {

// Monochromatic clique; vertices are 0-based indices into the coloring.
struct CliqueRecord {
  BitMask vertices;
  int color = 0;
  int order = 0;

  friend bool operator==(const CliqueRecord&, const CliqueRecord&) = default;
};

// Bit n-i-1 (when >= 0) and bit n+i+1 for every set bit i of x. The result
// has the length of x: links that close a triangle through link n.
BitMask invert(const BitMask& x, int n);

// Every monochromatic clique of `color` with at least min_order vertices that
// contains vertices 0 and b+1 and otherwise only vertices below b+1, with link
// b taken to have `color`. Unassigned links belong to neither color.
std::vector<CliqueRecord> cliques_through_link(const DistanceColoring& c, int b, int color, int min_order);

struct CliqueOrders {
  int color0 = 0;
  int color1 = 0;
  friend bool operator==(const CliqueOrders&, const CliqueOrders&) = default;
};

// Exact clique number of each color of a complete coloring.
CliqueOrders max_clique_orders(const DistanceColoring& c);

// Clique number of one color.
int max_clique_order(const DistanceColoring& c, int color);

struct ScanResult {
  std::optional<CliqueRecord> violation;
  bool ok() const { return !violation; }
};

// Re-inserts the assigned links in increasing order and returns the first
// color-0 clique of order >= k or color-1 clique of order >= j.
ScanResult rebuild_scan(const DistanceColoring& c, int k, int j);

// Does a complete coloring have a clique of `color` with at least L vertices?
bool has_clique(const DistanceColoring& c, int color, int L);

// No color-0 clique of order k and no color-1 clique of order j among the
// assigned links.
bool is_valid(const DistanceColoring& c, int k, int j);

}  // namespace ramsey
