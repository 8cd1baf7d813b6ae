#pragma once

// Distance colorings of complete graphs: the color of link (a, b) depends only
// on |a - b|, so an order-N coloring is stored as N-1 bits. Bit i holds the
// color of every link at distance i+1, i.e. of link (1, i+2).

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "ramsey/bitmask.hpp"

namespace ramsey {

// Possibly partial distance coloring. Unassigned distances have color bit 0.
class DistanceColoring {
 public:
  // Order-N coloring with every distance unassigned.
  explicit DistanceColoring(int order);
  // Complete coloring; colors.size() must be order-1.
  DistanceColoring(int order, BitMask colors);
  DistanceColoring(int order, BitMask colors, BitMask assigned);

  // Complete coloring from a bit string, order = length + 1.
  static DistanceColoring from_bits(std::string_view bits);

  int order() const { return order_; }
  int link_count() const { return order_ - 1; }
  const BitMask& colors() const { return colors_; }
  const BitMask& assigned() const { return assigned_; }
  bool complete() const { return assigned_.all(); }

  // Color of link index i (distance i+1), nullopt when unassigned.
  std::optional<int> bit(int i) const {
    if (!assigned_.test(static_cast<std::size_t>(i))) return std::nullopt;
    return colors_.test(static_cast<std::size_t>(i)) ? 1 : 0;
  }

  DistanceColoring with(int link, int color) const;
  // Swaps the two colors on assigned links.
  DistanceColoring complemented() const;

  friend bool operator==(const DistanceColoring&, const DistanceColoring&) = default;

 private:
  int order_;
  BitMask colors_;
  BitMask assigned_;
};

// Fully colored s-vertex prefix; s-1 bits.
struct Signature {
  BitMask bits;

  Signature() = default;
  explicit Signature(BitMask b) : bits(std::move(b)) {}
  static Signature from_value(int s, uint64_t value);

  int size() const { return static_cast<int>(bits.size()) + 1; }
  DistanceColoring to_coloring() const { return DistanceColoring(size(), bits); }

  friend bool operator==(const Signature&, const Signature&) = default;
  friend auto operator<=>(const Signature& a, const Signature& b) { return a.bits <=> b.bits; }
};

struct SignatureHash {
  std::size_t operator()(const Signature& s) const { return s.bits.hash(); }
};

struct SearchParams {
  int k = 3;  // color 0 may not contain a k-clique
  int j = 3;  // color 1 may not contain a j-clique
  int s = 2;
  int d = 3;
  uint64_t abort_threshold = UINT64_MAX;
  int l_estimate = 0;

  int forbidden_order(int color) const { return color == 0 ? k : j; }
  bool diagonal() const { return k == j; }
  // Throws UsageError unless 3 <= k <= j, s < d and abort_threshold > 0.
  void validate() const;
};

// Circulant form: distances p with min(p, N-p) in the connection set are
// colored 1, every other distance 0.
struct Certificate {
  int order = 0;
  std::vector<int> connection_set;
  int k = 0;
  int j = 0;

  // Throws UsageError when a distance is outside 1..floor(N/2) or repeated.
  void validate() const;
  friend bool operator==(const Certificate&, const Certificate&) = default;
};

// Vertices are 1-based. nullopt when the distance is unassigned.
std::optional<int> link_color(const DistanceColoring& c, int a, int b);

bool is_cyclic(const DistanceColoring& c);

// First m vertices.
DistanceColoring prefix(const DistanceColoring& c, int m);

DistanceColoring from_certificate(const Certificate& cert);
Certificate to_certificate(const DistanceColoring& c);

// Vertex relabeling x -> M*x (mod order) of a complete cyclic coloring:
// b'(x) = b((M(x+1) mod N) - 1).
DistanceColoring relabel(const DistanceColoring& c, int multiplier);

// Multipliers 1 <= M <= N/2 coprime with N; M and N-M give the same relabeling
// of a cyclic coloring.
std::vector<int> relabel_multipliers(int order);

// Distinct colorings in the relabeling orbit of c.
std::vector<DistanceColoring> relabel_orbit(const DistanceColoring& c);

// Lexicographically smallest color string over all relabelings (and, when
// reflect_colors is set, their complements).
BitMask canonical_form(const DistanceColoring& c, bool reflect_colors);

}  // namespace ramsey
