#pragma once

// Reference verification, independent of the distance-coloring clique engine:
// the coloring is expanded into an explicit graph and solved with a plain
// bitset branch and bound.

#include <cstdint>
#include <map>
#include <string>
#include <unordered_set>
#include <vector>

#include "json.hpp"

#include "ramsey/bitmask.hpp"
#include "ramsey/coloring.hpp"

namespace ramsey {

// Clique number of the graph formed by the links of `color`.
int reference_clique_number(const DistanceColoring& c, int color);

enum class Orientation { kNeither, kAsGiven, kSwapped, kBoth };
const char* orientation_name(Orientation o);

struct Verdict {
  int order = 0;
  int k = 0;
  int j = 0;
  int clique0 = 0;  // largest clique of color 0 (distances outside the connection set)
  int clique1 = 0;  // largest clique of color 1
  Orientation orientation = Orientation::kNeither;
  double seconds = 0;
  std::string method;

  bool passed() const { return orientation != Orientation::kNeither; }
};

// As given: color 0 has no k-clique and color 1 no j-clique. Swapped: the
// same with the colors exchanged.
Verdict verify_coloring(const DistanceColoring& c, int k, int j);
Verdict verify_certificate(const Certificate& cert, int k, int j);

nlohmann::json verdict_json(const Verdict& v, const std::string& id);

// Newline-delimited coloring store with dedup on the relabeling orbit
// (cyclic colorings) or on the exact bits (all others).
class ColoringDatabase {
 public:
  // `reflect_colors` adds global color exchange to the dedup key (k = j).
  explicit ColoringDatabase(bool reflect_colors) : reflect_colors_(reflect_colors) {}

  // Loads an existing file (if any) and appends later inserts to it.
  static ColoringDatabase open(const std::string& path, bool reflect_colors);

  enum class Insert { kInserted, kDuplicate };
  Insert insert(const DistanceColoring& c);

  struct OrderStats {
    std::size_t classes = 0;  // distinct records after dedup
    std::size_t raw = 0;      // distinct colorings, counting every relabeling
  };
  std::map<int, OrderStats> stats() const;

  std::size_t size() const { return records_.size(); }
  const std::vector<DistanceColoring>& records() const { return records_; }

 private:
  BitMask key(const DistanceColoring& c) const;

  bool reflect_colors_;
  std::string path_;
  std::vector<DistanceColoring> records_;
  std::vector<std::size_t> raw_;
  std::unordered_set<BitMask, BitMaskHash> index_;
};

}  // namespace ramsey
