#include "ramsey/verify.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <fstream>

#include "ramsey/errors.hpp"
#include "ramsey/formats.hpp"

namespace ramsey {
namespace {

using Row = std::vector<uint64_t>;

// Greedy-coloring branch and bound over an explicit adjacency matrix
// (Tomita-style MCQ).
class MaxClique {
 public:
  explicit MaxClique(std::vector<Row> adj) : adj_(std::move(adj)), n_(static_cast<int>(adj_.size())) {
    words_ = (n_ + 63) / 64;
  }

  int solve() {
    Row all(static_cast<std::size_t>(words_), 0);
    for (int v = 0; v < n_; ++v) all[static_cast<std::size_t>(v >> 6)] |= uint64_t{1} << (v & 63);
    best_ = n_ > 0 ? 1 : 0;
    expand(all, 0);
    return best_;
  }

 private:
  static bool empty(const Row& r) {
    return std::all_of(r.begin(), r.end(), [](uint64_t w) { return w == 0; });
  }

  // Orders the vertices of P by greedy color class; bound[i] is the number of
  // colors used up to and including order[i].
  void color_sort(const Row& p, std::vector<int>& order, std::vector<int>& bound) const {
    Row uncolored = p;
    int color = 0;
    while (!empty(uncolored)) {
      ++color;
      Row q = uncolored;
      while (!empty(q)) {
        int v = -1;
        for (int k = 0; k < words_; ++k) {
          if (q[static_cast<std::size_t>(k)]) {
            v = 64 * k + std::countr_zero(q[static_cast<std::size_t>(k)]);
            break;
          }
        }
        const uint64_t bit = uint64_t{1} << (v & 63);
        uncolored[static_cast<std::size_t>(v >> 6)] &= ~bit;
        q[static_cast<std::size_t>(v >> 6)] &= ~bit;
        const Row& a = adj_[static_cast<std::size_t>(v)];
        for (int k = 0; k < words_; ++k) q[static_cast<std::size_t>(k)] &= ~a[static_cast<std::size_t>(k)];
        order.push_back(v);
        bound.push_back(color);
      }
    }
  }

  void expand(Row p, int size) {
    std::vector<int> order, bound;
    color_sort(p, order, bound);
    for (std::size_t i = order.size(); i-- > 0;) {
      if (size + bound[i] <= best_) return;
      const int v = order[i];
      Row next(static_cast<std::size_t>(words_));
      const Row& a = adj_[static_cast<std::size_t>(v)];
      for (int k = 0; k < words_; ++k)
        next[static_cast<std::size_t>(k)] = p[static_cast<std::size_t>(k)] & a[static_cast<std::size_t>(k)];
      if (empty(next))
        best_ = std::max(best_, size + 1);
      else
        expand(std::move(next), size + 1);
      p[static_cast<std::size_t>(v >> 6)] &= ~(uint64_t{1} << (v & 63));
    }
  }

  std::vector<Row> adj_;
  int n_;
  int words_ = 0;
  int best_ = 0;
};

}  // namespace

int reference_clique_number(const DistanceColoring& c, int color) {
  if (!c.complete()) throw UsageError("reference_clique_number needs a complete coloring");
  const int n = c.order();
  const std::size_t words = static_cast<std::size_t>((n + 63) / 64);
  std::vector<Row> adj(static_cast<std::size_t>(n), Row(words, 0));
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && *link_color(c, u + 1, v + 1) == color)
        adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v >> 6)] |= uint64_t{1} << (v & 63);
  return MaxClique(std::move(adj)).solve();
}

const char* orientation_name(Orientation o) {
  switch (o) {
    case Orientation::kAsGiven: return "as-given";
    case Orientation::kSwapped: return "colors-swapped";
    case Orientation::kBoth: return "both";
    default: return "neither";
  }
}

Verdict verify_coloring(const DistanceColoring& c, int k, int j) {
  const auto start = std::chrono::steady_clock::now();
  Verdict v;
  v.order = c.order();
  v.k = k;
  v.j = j;
  v.method = "bitset-branch-and-bound";
  v.clique0 = reference_clique_number(c, 0);
  v.clique1 = reference_clique_number(c, 1);
  const bool as_given = v.clique0 < k && v.clique1 < j;
  const bool swapped = v.clique1 < k && v.clique0 < j;
  v.orientation = as_given && swapped ? Orientation::kBoth
                  : as_given          ? Orientation::kAsGiven
                  : swapped           ? Orientation::kSwapped
                                      : Orientation::kNeither;
  v.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return v;
}

Verdict verify_certificate(const Certificate& cert, int k, int j) {
  return verify_coloring(from_certificate(cert), k, j);
}

nlohmann::json verdict_json(const Verdict& v, const std::string& id) {
  return nlohmann::json{
      {"id", id},
      {"order", v.order},
      {"k", v.k},
      {"j", v.j},
      {"clique_number", {{"color0", v.clique0}, {"color1", v.clique1}}},
      {"orientation", orientation_name(v.orientation)},
      {"pass", v.passed()},
      {"method", v.method},
      {"seconds", v.seconds},
  };
}

BitMask ColoringDatabase::key(const DistanceColoring& c) const {
  if (is_cyclic(c)) return canonical_form(c, reflect_colors_);
  if (reflect_colors_) return std::min(c.colors(), c.colors().complement());
  return c.colors();
}

ColoringDatabase ColoringDatabase::open(const std::string& path, bool reflect_colors) {
  ColoringDatabase db(reflect_colors);
  {
    std::ifstream in(path);
    if (in) {
      for (const auto& r : read_records(in)) db.insert(record_coloring(r));
    }
  }
  db.path_ = path;
  return db;
}

ColoringDatabase::Insert ColoringDatabase::insert(const DistanceColoring& c) {
  if (!c.complete()) throw UsageError("only complete colorings can be stored");
  if (!index_.insert(key(c)).second) return Insert::kDuplicate;
  records_.push_back(c);
  raw_.push_back(is_cyclic(c) ? relabel_orbit(c).size() : 1);
  if (!path_.empty()) {
    std::ofstream out(path_, std::ios::app);
    if (!out) throw std::runtime_error("cannot append to " + path_);
    out << (is_cyclic(c) ? format_certificate(to_certificate(c)) : format_distance(c)) << '\n';
    if (!out) throw std::runtime_error("write to " + path_ + " failed");
  }
  return Insert::kInserted;
}

std::map<int, ColoringDatabase::OrderStats> ColoringDatabase::stats() const {
  std::map<int, OrderStats> out;
  for (std::size_t i = 0; i < records_.size(); ++i) {
    auto& s = out[records_[i].order()];
    ++s.classes;
    s.raw += raw_[i];
  }
  return out;
}

}  // namespace ramsey
