#pragma once

#include <cstdint>
#include <vector>

#include "ramsey/coloring.hpp"

namespace ramsey {

bool is_prime(int n);
// Smallest generator of the unit group mod n; throws if that group is not cyclic.
int smallest_primitive_root(int n);

// Color 1 on quadratic-residue distances. N prime, N = 1 mod 4.
DistanceColoring paley(int N);

// Colorings of prime order N that are constant on cosets of a subgroup of
// the unit group, with q a generator (0: smallest primitive root). Returns
// the alternating coloring C(q^k) = (1 + (-1)^k) / 2 when N = 1 mod 4, then,
// when 3 divides N - 1, the six non-constant colorings with C(q^k) depending
// on k mod 3, keyed by the colors of q, q^2, q^3 in increasing binary order.
std::vector<DistanceColoring> degenerate_prime(int N, int q = 0);

// Order 2p colorings. Link 1 has color 1; the colors of links 2, q, 2q and p
// are the bits of `code` (bit 0 for link 2, bit 1 for q, bit 2 for 2q, bit 3
// for p). A unit u = q^e gets the color of 1 or q by the parity of e, an even
// link 2u that of 2 or 2q. Needs p prime with p = 1 mod 4.
DistanceColoring degenerate_2p(int p, int code, int q = 0);
std::vector<DistanceColoring> degenerate_2p_family(int p, int q = 0);

// Units mod N, a subgroup G given by generators, and the orbits of the
// distance classes 1..N/2 under G and -1. Q is the unit group modulo G and -1;
// `generators` are unit representatives of a generating set of Q.
struct GroupStructure {
  int N = 0;
  std::vector<int> units;
  std::vector<int> subgroup;                  // G with its negatives, sorted
  std::vector<std::vector<int>> orbits;       // partition of 1..N/2
  std::vector<int> unit_orbit_starts;         // smallest class of each unit-group orbit
  std::vector<int> generators;

  int orbit_count() const { return static_cast<int>(orbits.size()); }
  int quotient_order() const { return static_cast<int>(units.size() / subgroup.size()); }
};

GroupStructure group_structure(int N, const std::vector<int>& subgroup_generators);

enum class QuotientMode {
  kFixedAction,      // every orbit colored freely: 2^(orbits - 1) colorings, cap 22 orbits
  kGeneratorAction,  // initial link per unit-group orbit plus keep/flip per generator, cap a + b <= 20
};

// Colorings constant on the orbits of G (and -1), link 1 colored 1. In
// generator mode assignments whose keep/flip choices contradict the
// relations of Q are dropped, so fewer than 2^(a+b-1) may come back.
std::vector<DistanceColoring> degenerate_quotient(const GroupStructure& g, QuotientMode mode);

// Order 2n coloring with adjacency blocks (A, ~A; ~A, A), n odd, where vertex
// x stands for (x mod 2, x mod n). `center` is the color of link n, the
// diagonal of the off-diagonal blocks.
DistanceColoring block_double(const DistanceColoring& a, int center = 1);

struct QuadrupleOptions {
  int k = 0;  // target clique orders; 0 means 2k - 1 and j + 1 of the input
  int j = 0;
  uint64_t budget = 1u << 20;  // candidates examined; exhaustive when 2^free fits
  uint64_t seed = 1;
  std::size_t max_results = 0;  // 0: unlimited
};

// Order 4N cyclic colorings whose links at multiples of 4 repeat c (each of
// the four residue classes mod 4 induces c); the other links are searched.
// Every result passes the clique check for the target.
std::vector<DistanceColoring> quadruple_candidates(const DistanceColoring& c, int k, int j,
                                                   const QuadrupleOptions& opts = {});

}  // namespace ramsey
