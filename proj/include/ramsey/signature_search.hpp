#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ramsey/coloring.hpp"

namespace ramsey {

// All s-1 signatures at Hamming distance one.
std::vector<Signature> neighbors(const Signature& sig);

// Cyclic colorings close to prefixes of c: for every prefix order m in
// [min_order, c.order()] whose palindrome condition b_i = b_{m-2-i} fails on at
// most max_mismatch pairs, every way of repairing those pairs that gives a
// valid (k, j) coloring. min_order 0 means 3.
std::vector<DistanceColoring> nearby_cyclic(const DistanceColoring& c, int k, int j, int max_mismatch = 10,
                                            int min_order = 0);

enum class SigStatus { kPending, kExtensible, kNotExtensible, kAborted };
const char* status_name(SigStatus s);

enum class Discovery { kSeed, kNeighbor, kRelabel };
const char* discovery_name(Discovery d);

struct SigEntry {
  SigStatus status = SigStatus::kPending;
  uint64_t tests = 0;
  Discovery via = Discovery::kSeed;
};

class SignatureStore {
 public:
  // Adds a pending entry unless the signature is already known.
  bool insert_if_absent(const Signature& sig, Discovery via);
  void decide(const Signature& sig, SigStatus status, uint64_t tests);

  const std::map<Signature, SigEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  std::vector<Signature> with_status(SigStatus s) const;
  std::vector<Signature> pending() const { return with_status(SigStatus::kPending); }

  // One line per signature: `sig <s> <hex> <status> tests=<n> via=<op>`.
  void write(std::ostream& out) const;
  static SignatureStore read(std::istream& in);

 private:
  std::map<Signature, SigEntry> entries_;
};

struct ComponentOptions {
  int max_mismatch = 10;
  bool use_relabel = true;
  int jobs = 1;
  uint64_t max_signatures = 0;  // 0: unlimited
  double budget_seconds = 0;    // 0: unlimited
};

// Breadth-first closure of the seeds under neighbors() and relabel-derived
// signatures. Each signature is vetted by extend_signature with the abort
// threshold of params. Relabel-derived signatures come from one order-d
// extension: its nearby cyclic colorings of order above s are relabeled by
// every multiplier and cut to their first s-1 bits. Pending entries of
// `resume` are processed first.
SignatureStore component_search(const std::vector<Signature>& seeds, const SearchParams& params,
                                const ComponentOptions& opts = {}, SignatureStore resume = {});

}  // namespace ramsey
