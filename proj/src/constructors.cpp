#include "ramsey/constructors.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>

#include "ramsey/clique_engine.hpp"
#include "ramsey/errors.hpp"

namespace ramsey {
namespace {

long mulmod(long a, long b, long n) { return (a * b) % n; }

int mult_order(int g, int n) {
  long x = g % n;
  int k = 1;
  while (x != 1) {
    x = mulmod(x, g, n);
    ++k;
    if (k > n) return 0;
  }
  return k;
}

std::vector<int> units_of(int n) {
  std::vector<int> u;
  for (int x = 1; x < n; ++x)
    if (std::gcd(x, n) == 1) u.push_back(x);
  return u;
}

int distance_class(long d, int N) {
  d %= N;
  if (d < 0) d += N;
  return static_cast<int>(std::min<long>(d, N - d));
}

// Builds the coloring from the color of each distance 1..N-1.
DistanceColoring from_function(int N, const std::function<int(int)>& color) {
  BitMask bits(static_cast<std::size_t>(N - 1));
  for (int d = 1; d < N; ++d) bits.set(static_cast<std::size_t>(d - 1), color(d) != 0);
  DistanceColoring c(N, std::move(bits));
  if (!is_cyclic(c)) throw InternalError("constructed coloring is not symmetric");
  return c;
}

// Discrete logarithms base g of every unit mod n.
std::vector<int> dlog_table(int g, int n) {
  std::vector<int> t(static_cast<std::size_t>(n), -1);
  long x = 1;
  for (int e = 0; t[static_cast<std::size_t>(x)] < 0; ++e) {
    t[static_cast<std::size_t>(x)] = e;
    x = mulmod(x, g, n);
  }
  return t;
}

void check_generator(int q, int n) {
  const int phi = static_cast<int>(units_of(n).size());
  if (q <= 0 || q >= n || std::gcd(q, n) != 1 || mult_order(q, n) != phi)
    throw UsageError(std::to_string(q) + " does not generate the unit group mod " + std::to_string(n));
}

}  // namespace

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

int smallest_primitive_root(int n) {
  if (n < 2) throw UsageError("no unit group below 2");
  const auto u = units_of(n);
  for (int g : u)
    if (mult_order(g, n) == static_cast<int>(u.size())) return g;
  throw UsageError("unit group mod " + std::to_string(n) + " is not cyclic");
}

DistanceColoring paley(int N) {
  if (!is_prime(N) || N % 4 != 1) throw UsageError("paley needs a prime N = 1 mod 4");
  std::vector<char> qr(static_cast<std::size_t>(N), 0);
  for (long x = 1; x < N; ++x) qr[static_cast<std::size_t>(x * x % N)] = 1;
  return from_function(N, [&](int d) { return qr[static_cast<std::size_t>(d)]; });
}

std::vector<DistanceColoring> degenerate_prime(int N, int q) {
  if (!is_prime(N) || N < 3) throw UsageError("degenerate_prime needs an odd prime");
  if (q == 0) q = smallest_primitive_root(N);
  check_generator(q, N);
  const auto lg = dlog_table(q, N);
  auto e = [&](int d) { return lg[static_cast<std::size_t>(d)]; };
  std::vector<DistanceColoring> out;
  if (N % 4 == 1) out.push_back(from_function(N, [&](int d) { return e(d) % 2 == 0 ? 1 : 0; }));
  if ((N - 1) % 3 == 0) {
    for (int code = 1; code < 7; ++code) {
      // residue 1 -> color of q, 2 -> q^2, 0 -> q^3
      const int by_res[3] = {(code >> 2) & 1, code & 1, (code >> 1) & 1};
      out.push_back(from_function(N, [&](int d) { return by_res[e(d) % 3]; }));
    }
  }
  return out;
}

DistanceColoring degenerate_2p(int p, int code, int q) {
  if (!is_prime(p) || p % 4 != 1) throw UsageError("degenerate_2p needs a prime p = 1 mod 4");
  if (code < 0 || code > 15) throw UsageError("code must be in 0..15");
  const int N = 2 * p;
  if (q == 0) q = smallest_primitive_root(N);
  check_generator(q, N);
  const auto lg_units = dlog_table(q, N);
  const auto lg_p = dlog_table(q % p, p);
  const int inv2 = (p + 1) / 2;
  const int c2 = code & 1, cq = (code >> 1) & 1, c2q = (code >> 2) & 1, cp = (code >> 3) & 1;
  return from_function(N, [&](int d) {
    if (d == p) return cp;
    if (d % 2 == 1) return lg_units[static_cast<std::size_t>(d)] % 2 == 0 ? 1 : cq;
    const int u = static_cast<int>(mulmod(d % p, inv2, p));
    return lg_p[static_cast<std::size_t>(u)] % 2 == 0 ? c2 : c2q;
  });
}

std::vector<DistanceColoring> degenerate_2p_family(int p, int q) {
  std::vector<DistanceColoring> out;
  for (int code = 0; code < 16; ++code) out.push_back(degenerate_2p(p, code, q));
  return out;
}

GroupStructure group_structure(int N, const std::vector<int>& subgroup_generators) {
  if (N < 3) throw UsageError("group structure needs N >= 3");
  GroupStructure g;
  g.N = N;
  g.units = units_of(N);
  std::vector<int> gens{N - 1};
  for (int x : subgroup_generators) {
    const int r = ((x % N) + N) % N;
    if (std::gcd(r, N) != 1) throw UsageError(std::to_string(x) + " is not a unit mod " + std::to_string(N));
    gens.push_back(r);
  }
  auto closure = [&](const std::vector<int>& gs) {
    std::set<int> h{1};
    std::vector<int> todo{1};
    while (!todo.empty()) {
      const int x = todo.back();
      todo.pop_back();
      for (int y : gs) {
        const int z = static_cast<int>(mulmod(x, y, N));
        if (h.insert(z).second) todo.push_back(z);
      }
    }
    return h;
  };
  const std::set<int> sub = closure(gens);
  g.subgroup.assign(sub.begin(), sub.end());

  // Orbits of the classes 1..N/2 under the subgroup.
  std::vector<int> owner(static_cast<std::size_t>(N / 2 + 1), -1);
  for (int d = 1; d <= N / 2; ++d) {
    if (owner[static_cast<std::size_t>(d)] >= 0) continue;
    std::set<int> orb;
    for (int s : g.subgroup) orb.insert(distance_class(static_cast<long>(d) * s, N));
    const int id = static_cast<int>(g.orbits.size());
    for (int x : orb) owner[static_cast<std::size_t>(x)] = id;
    g.orbits.emplace_back(orb.begin(), orb.end());
  }
  for (int d = 1; d <= N / 2; ++d)
    if (N % d == 0) g.unit_orbit_starts.push_back(d);

  std::vector<int> cur = gens;
  std::set<int> h = sub;
  for (int u : g.units) {
    if (h.count(u)) continue;
    g.generators.push_back(u);
    cur.push_back(u);
    h = closure(cur);
  }
  return g;
}

std::vector<DistanceColoring> degenerate_quotient(const GroupStructure& g, QuotientMode mode) {
  const int N = g.N;
  std::vector<DistanceColoring> out;
  if (mode == QuotientMode::kFixedAction) {
    const int a = g.orbit_count();
    if (a > 22) throw UsageError("more than 22 orbits");
    int one = -1;
    for (int i = 0; i < a; ++i)
      if (g.orbits[static_cast<std::size_t>(i)].front() == 1) one = i;
    std::vector<int> color_of(static_cast<std::size_t>(N / 2 + 1), 0);
    for (uint32_t m = 0; m < (1u << (a - 1)); ++m) {
      int bit = 0;
      for (int i = 0; i < a; ++i) {
        const int c = i == one ? 1 : static_cast<int>((m >> bit++) & 1u);
        for (int d : g.orbits[static_cast<std::size_t>(i)]) color_of[static_cast<std::size_t>(d)] = c;
      }
      out.push_back(from_function(N, [&](int d) { return color_of[static_cast<std::size_t>(distance_class(d, N))]; }));
    }
    return out;
  }

  const int a = static_cast<int>(g.unit_orbit_starts.size());
  const int b = static_cast<int>(g.generators.size());
  if (a + b > 20) throw UsageError("a + b exceeds 20");
  std::vector<int> moves;  // subgroup generators act without a flip
  for (int s : g.subgroup)
    if (s != 1) moves.push_back(s);
  for (uint32_t m = 0; m < (1u << (a + b - 1)); ++m) {
    std::vector<int> color_of(static_cast<std::size_t>(N / 2 + 1), -1);
    bool ok = true;
    int bit = 0;
    std::vector<int> flip(static_cast<std::size_t>(b));
    for (int i = 0; i < b; ++i) flip[static_cast<std::size_t>(i)] = static_cast<int>((m >> bit++) & 1u);
    for (int o = 0; o < a && ok; ++o) {
      const int start = g.unit_orbit_starts[static_cast<std::size_t>(o)];
      const int init = start == 1 ? 1 : static_cast<int>((m >> bit++) & 1u);
      std::vector<int> todo{start};
      color_of[static_cast<std::size_t>(start)] = init;
      while (!todo.empty() && ok) {
        const int d = todo.back();
        todo.pop_back();
        const int c = color_of[static_cast<std::size_t>(d)];
        auto reach = [&](int mult, int nc) {
          const int e = distance_class(static_cast<long>(d) * mult, N);
          int& slot = color_of[static_cast<std::size_t>(e)];
          if (slot < 0) {
            slot = nc;
            todo.push_back(e);
          } else if (slot != nc) {
            ok = false;
          }
        };
        for (int s : moves) reach(s, c);
        for (int i = 0; i < b; ++i) reach(g.generators[static_cast<std::size_t>(i)], c ^ flip[static_cast<std::size_t>(i)]);
      }
    }
    if (ok) out.push_back(from_function(N, [&](int d) { return color_of[static_cast<std::size_t>(distance_class(d, N))]; }));
  }
  return out;
}

DistanceColoring block_double(const DistanceColoring& a, int center) {
  if (!a.complete() || !is_cyclic(a)) throw UsageError("block_double needs a complete cyclic coloring");
  const int n = a.order();
  if (n % 2 == 0) throw UsageError("block_double needs an odd order");
  if (center != 0 && center != 1) throw UsageError("center color must be 0 or 1");
  return from_function(2 * n, [&](int d) {
    const int m = d % n;
    if (m == 0) return center;
    const int c = a.colors().test(static_cast<std::size_t>(m - 1)) ? 1 : 0;
    return d % 2 == 0 ? c : 1 - c;
  });
}

std::vector<DistanceColoring> quadruple_candidates(const DistanceColoring& c, int k, int j,
                                                   const QuadrupleOptions& opts) {
  if (!c.complete() || !is_cyclic(c)) throw UsageError("quadruple_candidates needs a complete cyclic coloring");
  const int tk = opts.k > 0 ? opts.k : 2 * k - 1;
  const int tj = opts.j > 0 ? opts.j : j + 1;
  const int N = c.order(), M = 4 * N;
  std::vector<int> free;
  for (int d = 1; 2 * d <= M; ++d)
    if (d % 4 != 0) free.push_back(d);
  const int F = static_cast<int>(free.size());
  std::vector<DistanceColoring> out;
  if (opts.budget == 0) return out;

  BitMask base(static_cast<std::size_t>(M - 1));
  for (int t = 1; t < N; ++t)
    if (c.colors().test(static_cast<std::size_t>(t - 1))) {
      base.set(static_cast<std::size_t>(4 * t - 1));
    }
  auto try_code = [&](auto&& bit_of) {
    BitMask bits = base;
    for (int i = 0; i < F; ++i)
      if (bit_of(i)) {
        const int d = free[static_cast<std::size_t>(i)];
        bits.set(static_cast<std::size_t>(d - 1));
        bits.set(static_cast<std::size_t>(M - d - 1));
      }
    DistanceColoring cand(M, std::move(bits));
    if (is_valid(cand, tk, tj)) out.push_back(std::move(cand));
    return opts.max_results && out.size() >= opts.max_results;
  };
  if (F < 63 && (uint64_t{1} << F) <= opts.budget) {
    for (uint64_t code = 0; code < (uint64_t{1} << F); ++code)
      if (try_code([&](int i) { return (code >> i) & 1u; })) break;
  } else {
    std::mt19937_64 rng(opts.seed);
    std::vector<char> pick(static_cast<std::size_t>(F));
    for (uint64_t t = 0; t < opts.budget; ++t) {
      for (auto& b : pick) b = static_cast<char>(rng() & 1u);
      if (try_code([&](int i) { return pick[static_cast<std::size_t>(i)] != 0; })) break;
    }
  }
  return out;
}

}  // namespace ramsey
