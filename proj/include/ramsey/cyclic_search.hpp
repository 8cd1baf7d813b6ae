#pragma once

#include <cstdint>
#include <vector>

#include "ramsey/bitmask.hpp"
#include "ramsey/coloring.hpp"

namespace ramsey {

// The links of a cyclic coloring: n bits with b_a = b_{n-1-a}, order n+1.
class SymmetricMask {
 public:
  SymmetricMask() = default;
  explicit SymmetricMask(BitMask bits);  // throws UsageError if not symmetric
  static SymmetricMask from_coloring(const DistanceColoring& c);

  int size() const { return static_cast<int>(bits_.size()); }
  int order() const { return size() + 1; }
  const BitMask& bits() const { return bits_; }
  DistanceColoring to_coloring() const { return DistanceColoring(order(), bits_); }

  friend bool operator==(const SymmetricMask&, const SymmetricMask&) = default;

 private:
  BitMask bits_;
};

// Flips bits a and n-1-a (one bit at the centre). Needs 0 <= 2a <= n.
SymmetricMask bit_flip(const SymmetricMask& m, int a);

// First ceil(n'/2) bits of m followed by its last floor(n'/2) bits. Needs
// 2 <= n' != m.size() and ceil(n'/2) <= m.size().
SymmetricMask reflect(const SymmetricMask& m, int n_prime);

// Number of monochromatic triangles through vertex 0 that flipping site a
// would create, for every site 0 <= a <= (n-1)/2.
std::vector<int> flip_site_scores(const DistanceColoring& c);

// A forbidden clique that needs one more link: it appears in any coloring
// in which every distance of `links` (bit i = distance i+1) has `color`.
struct IncompleteCyclicClique {
  int color = 0;
  int site = 0;  // flip site whose links complete it
  BitMask links;
};

struct Prevet {
  int links = 0;  // link count of the coloring it was built from
  std::vector<IncompleteCyclicClique> cliques;
  std::vector<bool> skip_site;  // some clique for this site lies in the lower half
};

// 1-incomplete forbidden cliques of a valid cyclic (k, j) coloring, thinned
// to `keep` by fewest distances above order/2.
Prevet build_prevet(const DistanceColoring& c, int k, int j, std::size_t keep = 1000);

// True when the candidate contains one of the prevet cliques.
bool prevet_rejects(const Prevet& p, const DistanceColoring& candidate);

struct CyclicSearchOptions {
  int lmin = 0;             // 0: order of the smallest seed
  bool fixed_lmin = false;  // never raise lmin
  int window = 8;           // lmin trails the best order by this much
  int reflect_flips = 1;    // flips tried after relabel and reflection (1 or 2)
  int batch = 100;
  int stall_step = 750;     // raise lmin by one after this many yield-less colorings
  bool stop_when_stalled = true;  // fixed lmin: end after stall_step yield-less colorings in a row
  int random_tries = 200;   // random 2-3 flip candidates per coloring of a stalled batch
  bool expand_orbits = true;  // report every relabeling of each class found
  std::size_t prevet_keep = 1000;
  std::size_t max_results = 0;  // 0: unlimited
  double budget_seconds = 60;
  uint64_t seed = 1;
};

struct CyclicSearchResult {
  std::vector<DistanceColoring> colorings;  // distinct, valid, order >= lmin when found
  std::size_t classes = 0;                  // up to relabeling
  int best_order = 0;
  int final_lmin = 0;
  uint64_t candidates = 0;
  uint64_t prevet_rejected = 0;
  uint64_t checked = 0;
  double seconds = 0;
};

// Local search over cyclic (k, j) colorings. From each pool coloring it
// tries up to two bit flips, and every relabeling reflected to a nearby order
// with up to one flip. Candidates are screened by the prevet list and then
// fully checked; new valid ones of order >= lmin join the front of the pool.
// A batch without new colorings triggers random relabel, reflect and 2-3
// flips at low-score sites.
CyclicSearchResult cyclic_local_search(const std::vector<DistanceColoring>& seeds, int k, int j,
                                       const CyclicSearchOptions& opts = {});

}  // namespace ramsey
