#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "ramsey/coloring.hpp"

namespace ramsey {

struct Census {
  int k = 0;
  int j = 0;
  int s = 0;
  int d = 0;
  bool reflection = false;  // diagonal counts are taken up to color exchange
  bool complete = true;     // false after an abort, a stop or truncation
  bool truncated = false;   // some coloring reached the order cap
  int exact_from = 2;       // counts below this order may be partial
  std::map<int, uint64_t> counts;
  int longest = 0;
  std::vector<DistanceColoring> colorings;
  uint64_t tests = 0;
  uint64_t signatures = 0;
  uint64_t aborted_signatures = 0;

  void merge(const Census& other);
};

struct EnumOptions {
  int jobs = 1;
  int max_order = 64;     // colorings are not grown past this order
  int store_from = 0;     // keep colorings of this order and up; 0 means d
  bool forcing = true;
  bool lookahead = false;  // closure pruning and out-of-order links below d
  bool out_of_order = true;
  int max_gap = 2;
  bool reflection = true;  // for k = j fix the first link to color 0
  double budget_seconds = 0;  // 0: unlimited
  std::string journal;        // resumable per-signature log
};

// Every valid coloring of order s with its bits as a signature, in increasing
// integer order of the bit mask. With reflection (k = j) the first bit is 0.
std::vector<Signature> valid_signatures(const SearchParams& params, bool reflection);

// Full enumeration: all valid s-signatures, each grown by depth-first search.
// Counts are exact for every order when look-ahead is off, and for orders
// >= d otherwise. Census::longest is the true maximum when it is >= d.
Census enumerate(const SearchParams& params, const EnumOptions& opts = {});

struct SignatureOutcome {
  bool rejected = false;  // the signature itself has a forbidden clique
  bool reached_d = false;
  int max_order = 0;
  std::vector<DistanceColoring> colorings;  // orders >= store_from
  std::map<int, uint64_t> counts;           // orders above s
  uint64_t tests_used = 0;
  bool aborted = false;
  bool truncated = false;
  bool stopped = false;
};

struct ExtendOptions {
  int max_order = 0;      // 0: d + 64 rounded to the word width in use
  int store_from = 0;     // 0: store nothing
  bool stop_at_d = false;
  bool forcing = true;
  bool lookahead = false;
  bool out_of_order = true;
  int max_gap = 2;
};

// Grows every extension of the signature. Each attempt to color a link counts
// as a test; past params.abort_threshold tests the run stops and reports
// aborted (treated as not extensible).
SignatureOutcome extend_signature(const Signature& sig, const SearchParams& params, const ExtendOptions& opts = {});

void write_census(std::ostream& out, const Census& c);
Census read_census(std::istream& in);

}  // namespace ramsey
