#include <random>
#include <set>

#include "doctest.h"
#include "oracle.hpp"
#include "ramsey/clique_engine.hpp"
#include "ramsey/constructors.hpp"
#include "ramsey/cyclic_search.hpp"
#include "ramsey/errors.hpp"
#include "test_util.hpp"

using namespace ramsey;

namespace {

SymmetricMask mask(std::string_view bits) { return SymmetricMask(BitMask::from_string(bits)); }

// Triangles {0,u,v} of the flipped color that use a link of site a.
int brute_score(const DistanceColoring& c, int a) {
  const int n = c.link_count(), a2 = n - 1 - a;
  const int nc = 1 - *c.bit(a);
  auto flipped = bit_flip(SymmetricMask::from_coloring(c), a).to_coloring();
  int count = 0;
  for (const auto& t : oracle::all_cliques(oracle::adjacency(flipped, nc), 3)) {
    if (t.size() != 3 || t[0] != 0) continue;
    const int d[3] = {t[1], t[2], t[2] - t[1]};
    bool touches = false;
    for (int x : d) touches = touches || x - 1 == a || x - 1 == a2;
    count += touches;
  }
  return count;
}

}  // namespace

TEST_CASE("symmetric masks") {
  CHECK_NOTHROW(mask("0110"));
  CHECK_THROWS_AS(mask("0100"), UsageError);
  auto m = SymmetricMask::from_coloring(testutil::pentagon());
  CHECK(m.order() == 5);
  CHECK(m.to_coloring() == testutil::pentagon());
}

TEST_CASE("bit flips") {
  CHECK(bit_flip(mask("0110"), 0) == mask("1111"));
  CHECK(bit_flip(mask("01010"), 2) == mask("01110"));
  CHECK(bit_flip(bit_flip(mask("0110"), 1), 1) == mask("0110"));
  CHECK_THROWS_AS(bit_flip(mask("0110"), -1), UsageError);
  CHECK_THROWS_AS(bit_flip(mask("0110"), 3), UsageError);
}

TEST_CASE("reflection to another order") {
  CHECK(reflect(mask("101101"), 4) == mask("1001"));
  CHECK(reflect(mask("111111"), 4) == mask("1111"));
  CHECK(reflect(mask("0110"), 7).bits().to_string() == "0110110");
  CHECK_THROWS_AS(reflect(mask("0110"), 4), UsageError);
  CHECK_THROWS_AS(reflect(mask("0110"), 1), UsageError);
  CHECK_THROWS_AS(reflect(mask("0110"), 9), UsageError);
  std::mt19937_64 rng(31);
  auto p = SymmetricMask::from_coloring(paley(37));
  for (int n2 = 20; n2 <= 60; ++n2)
    if (n2 != p.size()) CHECK(is_cyclic(reflect(p, n2).to_coloring()));
}

TEST_CASE("flip site scores") {
  auto pent = testutil::pentagon();
  auto s = flip_site_scores(pent);
  REQUIRE(s.size() == 2);
  for (int a = 0; a < 2; ++a) CHECK(s[a] == brute_score(pent, a));

  // order 3 divides nothing here, so no all-1 triangle uses one site alone
  for (int order : {5, 7, 8, 11, 20}) {
    auto zero = DistanceColoring(order, BitMask(order - 1));
    for (int v : flip_site_scores(zero)) CHECK(v == 0);
  }
  // with 3 | order the site of distance order/3 closes {0, N/3, 2N/3}
  CHECK(flip_site_scores(DistanceColoring(9, BitMask(8)))[2] == 1);

  std::mt19937_64 rng(32);
  for (int t = 0; t < 40; ++t) {
    int n = 6 + static_cast<int>(rng() % 30);
    BitMask m(n - 1);
    for (int i = 0; 2 * i <= n - 2; ++i) {
      bool b = rng() & 1;
      m.set(i, b);
      m.set(n - 2 - i, b);
    }
    DistanceColoring c(n, m);
    auto sc = flip_site_scores(c);
    for (int a = 0; a < static_cast<int>(sc.size()); ++a) CHECK(sc[a] == brute_score(c, a));
  }
}

TEST_CASE("prevet is sound") {
  auto seed = testutil::certificate(5, 9);
  auto co = max_clique_orders(seed);
  const int k = co.color0 + 1, j = co.color1 + 1;
  auto pv = build_prevet(seed, k, j);
  REQUIRE_FALSE(pv.cliques.empty());
  CHECK(pv.cliques.size() <= 1000);
  CHECK_FALSE(prevet_rejects(pv, seed));

  const auto m = SymmetricMask::from_coloring(seed);
  const auto& e = pv.cliques.front();
  auto hit = bit_flip(m, e.site).to_coloring();
  CHECK(prevet_rejects(pv, hit));
  CHECK_FALSE(is_valid(hit, k, j));

  int rejected = 0;
  auto sweep = [&](const DistanceColoring& cand) {
    if (!prevet_rejects(pv, cand)) return;
    ++rejected;
    CHECK_FALSE(is_valid(cand, k, j));
  };
  const int sites = (m.size() + 1) / 2;
  for (int a = 0; a < sites; ++a) {
    const auto one = bit_flip(m, a);
    sweep(one.to_coloring());
    for (int b = a + 1; b < sites; b += 3) sweep(bit_flip(one, b).to_coloring());
  }
  for (int n2 = 120; n2 <= 140; ++n2) {
    if (n2 == m.size()) continue;
    const auto r = reflect(m, n2);
    sweep(r.to_coloring());
    for (int a = 0; 2 * a <= n2 - 1; a += 5) sweep(bit_flip(r, a).to_coloring());
  }
  CHECK(rejected > 0);
}

TEST_CASE("cyclic search: (4,4) never passes 17") {
  CyclicSearchOptions o;
  o.budget_seconds = 5;
  auto r = cyclic_local_search({paley(17)}, 4, 4, o);
  CHECK(r.best_order == 17);
  for (const auto& c : r.colorings) {
    CHECK(c.order() <= 17);
    CHECK(is_cyclic(c));
    CHECK(oracle::valid(c, 4, 4));
  }
  CHECK(cyclic_local_search({}, 4, 4, o).colorings.empty());
  CHECK_THROWS_AS(cyclic_local_search({DistanceColoring::from_bits("0010")}, 4, 4, o), UsageError);
}

TEST_CASE("cyclic search climbs from a smaller seed") {
  CyclicSearchOptions o;
  o.budget_seconds = 10;
  o.max_results = 0;
  auto r = cyclic_local_search({paley(13)}, 4, 4, o);
  CHECK(r.best_order == 17);
  std::set<BitMask> seen;
  for (const auto& c : r.colorings) {
    CHECK(seen.insert(c.colors()).second);
    CHECK(c.order() >= r.final_lmin - o.window);
    CHECK(is_cyclic(c));
    CHECK(oracle::valid(c, 4, 4));
  }
}
