#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "doctest.h"
#include "oracle.hpp"
#include "ramsey/coloring.hpp"
#include "ramsey/errors.hpp"
#include "ramsey/formats.hpp"
#include "test_util.hpp"

using namespace ramsey;
using testutil::pentagon;

namespace {

DistanceColoring random_coloring(std::mt19937_64& rng, int n) {
  BitMask m(n - 1);
  for (int i = 0; i < n - 1; ++i) m.set(i, rng() & 1);
  return DistanceColoring(n, m);
}

DistanceColoring random_cyclic(std::mt19937_64& rng, int n) {
  BitMask m(n - 1);
  for (int i = 0; 2 * i <= n - 2; ++i) {
    bool b = rng() & 1;
    m.set(i, b);
    m.set(n - 2 - i, b);
  }
  return DistanceColoring(n, m);
}

}  // namespace

TEST_CASE("bitmask basics") {
  BitMask m = BitMask::from_string("0110");
  CHECK(m.size() == 4);
  CHECK(m.count() == 2);
  CHECK(m.to_string() == "0110");
  CHECK(*m.lowest() == 1);
  CHECK(*m.highest() == 2);
  CHECK(m.complement().to_string() == "1001");
  CHECK(m.resized(6).to_string() == "011000");
  CHECK(m.resized(2).to_string() == "01");
  CHECK(BitMask::ones(70).count() == 70);
  CHECK(BitMask::from_string("01").is_subset_of(m));
  CHECK_FALSE(BitMask::from_string("1").resized(4).is_subset_of(m));
  CHECK(BitMask(100).none());
  CHECK_FALSE(BitMask(5).lowest().has_value());
}

TEST_CASE("link_color reads the distance bit") {
  auto c = pentagon();
  CHECK(*link_color(c, 1, 3) == 1);
  CHECK(*link_color(c, 2, 3) == 0);
  CHECK(*link_color(c, 3, 1) == 1);
  CHECK_FALSE(link_color(DistanceColoring(5), 1, 2).has_value());
  CHECK_THROWS_AS(link_color(c, 0, 2), UsageError);
  CHECK_THROWS_AS(link_color(c, 1, 6), UsageError);
  CHECK_THROWS_AS(link_color(c, 2, 2), UsageError);
}

TEST_CASE("link colors are translation invariant") {
  std::mt19937_64 rng(5);
  auto c = random_coloring(rng, 12);
  for (int a = 1; a <= 12; ++a)
    for (int b = 1; b <= 12; ++b)
      for (int t = 1; a + t <= 12 && b + t <= 12; ++t)
        if (a != b) CHECK(link_color(c, a, b) == link_color(c, a + t, b + t));
}

TEST_CASE("is_cyclic") {
  CHECK(is_cyclic(pentagon()));
  CHECK_FALSE(is_cyclic(DistanceColoring::from_bits("0010")));
  CHECK_THROWS_AS(is_cyclic(DistanceColoring(5)), UsageError);
  std::mt19937_64 rng(1);
  for (int n = 3; n < 40; ++n) {
    auto c = random_cyclic(rng, n);
    CHECK(is_cyclic(c));
    CHECK(from_certificate(to_certificate(c)) == c);
  }
}

TEST_CASE("prefix") {
  auto c = pentagon();
  CHECK(prefix(c, 3).colors().to_string() == "01");
  CHECK(prefix(c, 5) == c);
  CHECK_THROWS_AS(prefix(c, 1), UsageError);
  CHECK_THROWS_AS(prefix(c, 6), UsageError);
  std::mt19937_64 rng(2);
  auto r = random_coloring(rng, 20);
  CHECK(prefix(prefix(r, 15), 9) == prefix(r, 9));
}

TEST_CASE("prefixes of valid colorings stay valid") {
  auto c = testutil::certificate(5, 9);
  int k0 = oracle::clique_number(c, 0), k1 = oracle::clique_number(c, 1);
  for (int m : {10, 30, 60, 100})
    CHECK(oracle::valid(prefix(c, m), k0 + 1, k1 + 1));
}

TEST_CASE("certificates") {
  auto c = from_certificate(Certificate{5, {1}, 3, 3});
  CHECK(c.colors().to_string() == "1001");
  CHECK(to_certificate(c) == Certificate{5, {1}, 0, 0});
  CHECK_THROWS_AS(to_certificate(DistanceColoring::from_bits("0010")), UsageError);
  CHECK_THROWS_AS(from_certificate(Certificate{6, {4}, 3, 3}), UsageError);
  CHECK_THROWS_AS(from_certificate(Certificate{6, {1, 1}, 3, 3}), UsageError);

  auto recs = read_records_file(testutil::data_path("certificates/k5_j9.txt"));
  auto cert = std::get<Certificate>(recs.at(0));
  auto big = from_certificate(cert);
  CHECK(big.order() == 132);
  // 66 = N/2 is in the set and covers a single distance
  CHECK(cert.connection_set.back() == 66);
  CHECK(big.colors().count() == 2 * cert.connection_set.size() - 1);
  auto back = to_certificate(big);
  CHECK(back.connection_set == cert.connection_set);
}

TEST_CASE("relabel") {
  CHECK(relabel(pentagon(), 2).colors().to_string() == "1001");
  CHECK(relabel(pentagon(), 1) == pentagon());
  CHECK_THROWS_AS(relabel(DistanceColoring::from_bits("01110"), 2), UsageError);
  CHECK_THROWS_AS(relabel(DistanceColoring::from_bits("0010"), 2), UsageError);

  std::mt19937_64 rng(3);
  for (int n : {11, 17, 24, 31}) {
    auto c = random_cyclic(rng, n);
    for (int m = 1; m < n; ++m) {
      if (std::gcd(m, n) != 1) continue;
      int inv = 1;
      while (inv * m % n != 1) ++inv;
      auto r = relabel(c, m);
      CHECK(is_cyclic(r));
      CHECK(relabel(r, inv) == c);
      CHECK(oracle::clique_number(r, 0) == oracle::clique_number(c, 0));
      CHECK(oracle::clique_number(r, 1) == oracle::clique_number(c, 1));
    }
  }
}

TEST_CASE("canonical form is constant on relabeling orbits") {
  CHECK(canonical_form(pentagon(), true).to_string() == "0110");
  CHECK(canonical_form(pentagon(), false).to_string() == "0110");
  std::mt19937_64 rng(4);
  for (int n = 5; n <= 40; n += 5) {
    auto c = random_cyclic(rng, n);
    // explicit orbit by the direct rule b'(x) = b((M(x+1) mod N) - 1)
    BitMask best = c.colors();
    for (int m = 1; m < n; ++m) {
      if (std::gcd(m, n) != 1) continue;
      BitMask r(n - 1);
      for (int x = 0; x < n - 1; ++x) r.set(x, c.colors().test((m * (x + 1)) % n - 1));
      if (r < best) best = r;
      CHECK(canonical_form(DistanceColoring(n, r), false) == canonical_form(c, false));
    }
    CHECK(canonical_form(c, false) == best);
  }
  CHECK_THROWS_AS(canonical_form(DistanceColoring::from_bits("0010"), false), UsageError);
}

TEST_CASE("search params validation") {
  SearchParams p;
  p.k = 3, p.j = 4, p.s = 4, p.d = 8;
  CHECK_NOTHROW(p.validate());
  p.k = 5;
  CHECK_THROWS_AS(p.validate(), UsageError);
  p.k = 3, p.s = 8;
  CHECK_THROWS_AS(p.validate(), UsageError);
  p.s = 4, p.abort_threshold = 0;
  CHECK_THROWS_AS(p.validate(), UsageError);
}

TEST_CASE("line formats round-trip") {
  std::mt19937_64 rng(6);
  for (int n = 2; n < 150; n += 7) {
    auto c = random_coloring(rng, n);
    CHECK(parse_distance(format_distance(c)) == c);
  }
  Certificate cert{13, {1, 5}, 0, 0};
  CHECK(format_certificate(cert) == "circulant 13 : 1 5");
  CHECK(parse_certificate("circulant 13 : 1 5") == cert);
  CHECK(parse_certificate("CirculantGraph[13, {1, 5, 8, 12,}]") == cert);
  CHECK(to_hex(BitMask::from_string("10000001")) == "18");
  CHECK(from_hex("18", 8).to_string() == "10000001");

  std::istringstream in("# comment\n\ncirculant 5 : 1\ndistance 5 : 6\n");
  auto recs = read_records(in);
  REQUIRE(recs.size() == 2);
  CHECK(record_coloring(recs[0]) == from_certificate(Certificate{5, {1}, 0, 0}));
  CHECK(record_coloring(recs[1]) == pentagon());
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(parse_certificate("circulant x : 1"), ParseError);
  CHECK_THROWS_AS(parse_certificate("circulant 5 : 9"), ParseError);
  CHECK_THROWS_AS(parse_distance("distance 5 : zz"), ParseError);
  CHECK_THROWS_AS(parse_distance("distance 5 : 6ff"), ParseError);
  std::istringstream in("circulant 5 : 1\nbogus line\n");
  try {
    read_records(in);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
}
