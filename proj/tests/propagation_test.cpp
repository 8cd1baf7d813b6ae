#include <random>

#include "doctest.h"
#include "oracle.hpp"
#include "ramsey/clique_engine.hpp"
#include "ramsey/errors.hpp"
#include "ramsey/propagation.hpp"
#include "test_util.hpp"

using namespace ramsey;

namespace {

SearchParams params(int k, int j, int d) {
  SearchParams p;
  p.k = k;
  p.j = j;
  p.s = 2;
  p.d = d;
  return p;
}

// Does giving link w the color of b close a forbidden clique through 0, b+1
// and w+1 whose other vertices lie below b+1?
bool trial_hits(const DistanceColoring& c, int b, int w, int color, int K) {
  auto adj = oracle::adjacency(c.with(b, color).with(w, color), color);
  if (!adj[b + 1][w + 1]) return false;
  std::vector<int> cand;
  for (int v = 1; v < b + 1; ++v)
    if (v != w + 1 && adj[0][v] && adj[b + 1][v] && adj[w + 1][v]) cand.push_back(v);
  oracle::Adjacency sub(cand.size(), std::vector<char>(cand.size()));
  for (std::size_t x = 0; x < cand.size(); ++x)
    for (std::size_t y = 0; y < cand.size(); ++y) sub[x][y] = adj[cand[x]][cand[y]];
  return oracle::clique_number(sub) + 3 >= K;
}

ForcedLinks trial_forced(const DistanceColoring& c, int b, int color, int K) {
  ForcedLinks out;
  for (int w = 0; w < c.link_count(); ++w) {
    if (w == b || !trial_hits(c, b, w, color, K)) continue;
    auto cur = c.bit(w);
    if (!cur)
      out.links.push_back({w, 1 - color});
    else if (*cur == color)
      out.contradiction = true;
  }
  return out;
}

DistanceColoring random_partial(std::mt19937_64& rng, int n, double p_assigned) {
  BitMask colors(n - 1), assigned(n - 1);
  std::uniform_real_distribution<double> u(0, 1);
  for (int i = 0; i < n - 1; ++i) {
    colors.set(i, rng() & 1);
    assigned.set(i, u(rng) < p_assigned);
  }
  return DistanceColoring(n, colors & assigned, assigned);
}

bool is_clique(const DistanceColoring& c, const std::vector<int>& vs, int color) {
  for (std::size_t a = 0; a < vs.size(); ++a)
    for (std::size_t z = a + 1; z < vs.size(); ++z) {
      auto v = c.bit(std::abs(vs[z] - vs[a]) - 1);
      if (!v || *v != color) return false;
    }
  return true;
}

// Every completion of c to order d that the oracle accepts.
std::vector<DistanceColoring> completions(const DistanceColoring& c, int d, int k, int j) {
  std::vector<DistanceColoring> out;
  const int fixed = c.link_count(), free = d - 1 - fixed;
  for (uint64_t v = 0; v < (uint64_t{1} << free); ++v) {
    BitMask m = c.colors().resized(d - 1);
    for (int i = 0; i < free; ++i) m.set(fixed + i, (v >> i) & 1);
    DistanceColoring x(d, m);
    if (oracle::valid(x, k, j)) out.push_back(x);
  }
  return out;
}

}  // namespace

TEST_CASE("forced links: fixtures") {
  auto p = params(3, 3, 5);
  auto f = forced_links(DistanceColoring(3), 0, 0, p);
  CHECK_FALSE(f.contradiction);
  CHECK(f.links == std::vector<ForcedLink>{{1, 1}});

  // pentagon prefix (0,1) with link 2 colored 1, one more open link
  DistanceColoring c(5, BitMask::from_string("0100"), BitMask::from_string("1100"));
  auto g = forced_links(c, 2, 1, p);
  auto want = trial_forced(c, 2, 1, 3);
  CHECK(g.links == want.links);
  CHECK(g.contradiction == want.contradiction);

  CHECK(forced_links(DistanceColoring(6), 4, 1, params(4, 4, 8)).links.empty());
  CHECK_THROWS_AS(forced_links(DistanceColoring(5), 4, 0, p), UsageError);
}

TEST_CASE("forced links match the two-value trial") {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 10000; ++t) {
    const int n = 3 + static_cast<int>(rng() % 12);
    auto c = random_partial(rng, n, 0.2 + 0.6 * (rng() % 100) / 100.0);
    const int b = static_cast<int>(rng() % (n - 1));
    const int color = rng() & 1;
    const int k = 3 + static_cast<int>(rng() % 2), j = k + static_cast<int>(rng() % 2);
    auto p = params(k, j, n + 1);
    auto got = forced_links(c, b, color, p);
    auto want = trial_forced(c, b, color, p.forbidden_order(color));
    auto show = [](const ForcedLinks& f) {
      std::string r = f.contradiction ? "x" : "";
      for (auto [w, col] : f.links) r += " " + std::to_string(w) + ":" + std::to_string(col);
      return r;
    };
    INFO("colors ", c.colors().to_string(), " assigned ", c.assigned().to_string(), " b ", b, " color ", color,
         " k ", k, " j ", j, " got", show(got), " want", show(want));
    REQUIRE(got.links == want.links);
    REQUIRE(got.contradiction == want.contradiction);
    for (auto [w, col] : got.links)
      CHECK(oracle::clique_number(c.with(b, color).with(w, 1 - col), 1 - col) >= p.forbidden_order(1 - col));
  }
}

TEST_CASE("incomplete cliques satisfy their definition") {
  // colored distances 1, 3, 4 (color 0); 2 and 5 open: {0,1,2,5} is one pair short
  BitMask colors(7), assigned(7);
  for (int dist : {1, 3, 4}) assigned.set(dist - 1);
  auto fixture = DistanceColoring(8, colors, assigned);
  auto recs = incomplete_cliques(fixture, params(4, 4, 8));
  bool seen = false;
  for (const auto& r : recs)
    seen = seen || (r.color == 0 && r.missing == std::vector<int>{1, 4});
  CHECK(seen);

  CHECK(incomplete_cliques(testutil::pentagon(), params(3, 3, 5)).empty());

  std::mt19937_64 rng(22);
  for (int t = 0; t < 2000; ++t) {
    const int n = 5 + static_cast<int>(rng() % 10);
    auto c = random_partial(rng, n, 0.6);
    const int k = 3 + static_cast<int>(rng() % 2), j = k + static_cast<int>(rng() % 2);
    auto p = params(k, j, n);
    const int gap = 2 + static_cast<int>(rng() % 2);
    for (const auto& r : incomplete_cliques(c, p, gap)) {
      REQUIRE(r.missing.size() >= 1);
      REQUIRE(static_cast<int>(r.missing.size()) <= gap);
      std::vector<int> vs;
      r.vertices.for_each([&](std::size_t v) { vs.push_back(static_cast<int>(v)); });
      CHECK(static_cast<int>(vs.size()) == p.forbidden_order(r.color));
      CHECK(vs.front() == 0);
      CHECK(vs.back() < n);
      DistanceColoring filled = c;
      for (int m : r.missing) {
        CHECK_FALSE(c.bit(m).has_value());
        CHECK(r.vertices.test(m + 1));
        filled = filled.with(m, r.color);
      }
      CHECK(is_clique(filled, vs, r.color));
    }
  }
}

TEST_CASE("extensibility check is sound") {
  auto p = params(3, 3, 5);
  auto v = extensibility_check(DistanceColoring(3, BitMask::from_string("01")), p);
  CHECK(v.verdict != ExtensionVerdict::kContradiction);

  // every valid (4,4) coloring of order 10 against its order-17 completions
  int contradictions = 0;
  auto q = params(4, 4, 17);
  for (const auto& c : oracle::all_valid(10, 4, 4)) {
    auto e = extensibility_check(c, q);
    auto done = completions(c, 17, 4, 4);
    if (e.verdict == ExtensionVerdict::kContradiction) {
      ++contradictions;
      CHECK(done.empty());
      continue;
    }
    for (const auto& x : done)
      for (auto [link, col] : e.forced) CHECK(*x.bit(link) == col);
  }
  CHECK(contradictions > 0);
}

TEST_CASE("applying forced links converges") {
  auto q = params(4, 4, 17);
  int checked = 0;
  for (const auto& c : oracle::all_valid(11, 4, 4)) {
    DistanceColoring ext(17, c.colors().resized(16), c.assigned().resized(16));
    auto e = extensibility_check(ext, q);
    if (e.verdict == ExtensionVerdict::kContradiction || e.forced.empty()) continue;
    int rounds = 0;
    while (e.verdict != ExtensionVerdict::kContradiction && !e.forced.empty()) {
      for (auto [link, col] : e.forced) {
        REQUIRE_FALSE(ext.bit(link).has_value());
        ext = ext.with(link, col);
      }
      e = extensibility_check(ext, q);
      REQUIRE(++rounds <= 16);
    }
    if (e.verdict == ExtensionVerdict::kContradiction) CHECK(completions(c, 17, 4, 4).empty());
    // converged: one more run changes nothing
    auto again = extensibility_check(ext, q);
    CHECK(again.verdict == e.verdict);
    CHECK(again.forced.empty() == e.forced.empty());
    if (++checked == 300) break;
  }
  CHECK(checked > 0);
}

TEST_CASE("branch link choice") {
  DistanceColoring c(12);
  std::vector<int> stats(11, 0);
  stats[5] = 3;
  stats[7] = 1;
  CHECK(pick_branch_link(c, stats, 12) == 5);
  std::vector<int> zero(11, 0);
  CHECK(pick_branch_link(c.with(0, 1).with(1, 0), zero, 12) == 2);
  std::vector<int> tie(11, 0);
  tie[4] = tie[9] = 2;
  CHECK(pick_branch_link(c, tie, 12) == 4);
  CHECK_THROWS_AS(pick_branch_link(testutil::pentagon(), std::vector<int>(4, 0), 5), UsageError);
}
