#pragma once

#include <vector>

#include "ramsey/bitmask.hpp"
#include "ramsey/coloring.hpp"

namespace ramsey {

struct ForcedLink {
  int link = 0;
  int color = 0;
  friend bool operator==(const ForcedLink&, const ForcedLink&) = default;
  friend auto operator<=>(const ForcedLink&, const ForcedLink&) = default;
};

struct ForcedLinks {
  std::vector<ForcedLink> links;  // sorted by link
  // Some link would need both colors: a forbidden clique through b already
  // exists among the assigned links.
  bool contradiction = false;
};

// Links forced to 1 - color by assigning `color` to link b. A link w is forced
// when a color clique of order K-1 (K = forbidden order of `color`) made of
// vertex 0, vertex b+1 and vertices below b+1 has color-`color` links to
// vertex w+1 from all its vertices except 0, with link w itself counted as
// `color`. Every emitted link would complete a forbidden K-clique if given
// `color`.
ForcedLinks forced_links(const DistanceColoring& c, int b, int color, const SearchParams& params);

struct IncompleteClique {
  int color = 0;
  std::vector<int> missing;  // uncolored links from vertex 0, increasing
  BitMask vertices;          // every clique vertex, vertex 0 included
};

// 2-incomplete (max_gap = 2) or 2- and 3-incomplete (max_gap = 3) forbidden
// cliques with every vertex below params.d. The missing links all start at
// vertex 0. Not exhaustive past internal caps.
std::vector<IncompleteClique> incomplete_cliques(const DistanceColoring& c, const SearchParams& params,
                                                 int max_gap = 2);

enum class ExtensionVerdict { kContradiction, kExtensible, kUnknown };

struct Extensibility {
  ExtensionVerdict verdict = ExtensionVerdict::kUnknown;
  std::vector<ForcedLink> forced;  // uncolored links below d-1 fixed in every order-d extension
  std::vector<int> pair_counts;    // per link below d-1: incomplete cliques missing it
};

// Implication closure over the incomplete cliques of c. kContradiction means
// c has no extension of order params.d; the other verdicts promise nothing.
Extensibility extensibility_check(const DistanceColoring& c, const SearchParams& params, int max_gap = 2);

// Uncolored link below d-1 with the largest pair count; ties go to the lowest
// index. Links beyond c's own length count as uncolored.
int pick_branch_link(const DistanceColoring& c, const std::vector<int>& pair_counts, int d);

}  // namespace ramsey
