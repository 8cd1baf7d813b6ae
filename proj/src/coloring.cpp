#include "ramsey/coloring.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>
#include <string>

#include "ramsey/errors.hpp"

namespace ramsey {

DistanceColoring::DistanceColoring(int order)
    : order_(order), colors_(order >= 2 ? order - 1 : 0), assigned_(order >= 2 ? order - 1 : 0) {
  if (order < 2) throw UsageError("coloring order must be at least 2");
}

DistanceColoring::DistanceColoring(int order, BitMask colors)
    : DistanceColoring(order, colors, BitMask::ones(colors.size())) {}

DistanceColoring::DistanceColoring(int order, BitMask colors, BitMask assigned)
    : order_(order), colors_(std::move(colors)), assigned_(std::move(assigned)) {
  if (order < 2) throw UsageError("coloring order must be at least 2");
  const auto links = static_cast<std::size_t>(order - 1);
  if (colors_.size() != links || assigned_.size() != links)
    throw UsageError("coloring of order " + std::to_string(order) + " needs " + std::to_string(links) + " bits");
  if (!colors_.is_subset_of(assigned_)) throw UsageError("unassigned distances must carry color 0");
}

DistanceColoring DistanceColoring::from_bits(std::string_view bits) {
  return DistanceColoring(static_cast<int>(bits.size()) + 1, BitMask::from_string(bits));
}

DistanceColoring DistanceColoring::with(int link, int color) const {
  if (link < 0 || link >= link_count()) throw UsageError("link index out of range");
  DistanceColoring r = *this;
  r.assigned_.set(static_cast<std::size_t>(link));
  r.colors_.set(static_cast<std::size_t>(link), color != 0);
  return r;
}

DistanceColoring DistanceColoring::complemented() const {
  DistanceColoring r = *this;
  r.colors_ = colors_.complement() & assigned_;
  return r;
}

Signature Signature::from_value(int s, uint64_t value) {
  if (s < 2 || s > 65) throw UsageError("signature size must be in 2..65");
  BitMask b(static_cast<std::size_t>(s - 1));
  for (int i = 0; i < s - 1; ++i)
    if ((value >> i) & 1u) b.set(static_cast<std::size_t>(i));
  return Signature(std::move(b));
}

void SearchParams::validate() const {
  if (k < 3 || j < k) throw UsageError("clique orders must satisfy 3 <= k <= j");
  if (s < 2 || s >= d) throw UsageError("signature size must satisfy 2 <= s < d");
  if (abort_threshold == 0) throw UsageError("abort threshold must be positive");
}

void Certificate::validate() const {
  if (order < 2) throw UsageError("certificate order must be at least 2");
  std::vector<int> sorted = connection_set;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] < 1 || sorted[i] > order / 2)
      throw UsageError("distance " + std::to_string(sorted[i]) + " outside 1.." + std::to_string(order / 2));
    if (i > 0 && sorted[i] == sorted[i - 1]) throw UsageError("repeated distance " + std::to_string(sorted[i]));
  }
}

std::optional<int> link_color(const DistanceColoring& c, int a, int b) {
  if (a < 1 || b < 1 || a > c.order() || b > c.order() || a == b)
    throw UsageError("link (" + std::to_string(a) + ", " + std::to_string(b) + ") is not a link of an order-" +
                     std::to_string(c.order()) + " coloring");
  return c.bit(std::abs(a - b) - 1);
}

bool is_cyclic(const DistanceColoring& c) {
  if (!c.complete()) throw UsageError("is_cyclic needs a complete coloring");
  const int n = c.link_count();
  for (int i = 0; 2 * i < n - 1; ++i)
    if (c.colors().test(static_cast<std::size_t>(i)) != c.colors().test(static_cast<std::size_t>(n - 1 - i)))
      return false;
  return true;
}

DistanceColoring prefix(const DistanceColoring& c, int m) {
  if (m < 2 || m > c.order()) throw UsageError("prefix order out of range");
  const auto links = static_cast<std::size_t>(m - 1);
  return DistanceColoring(m, c.colors().resized(links), c.assigned().resized(links));
}

DistanceColoring from_certificate(const Certificate& cert) {
  cert.validate();
  BitMask bits(static_cast<std::size_t>(cert.order - 1));
  for (int p : cert.connection_set) {
    bits.set(static_cast<std::size_t>(p - 1));
    bits.set(static_cast<std::size_t>(cert.order - p - 1));
  }
  return DistanceColoring(cert.order, std::move(bits));
}

Certificate to_certificate(const DistanceColoring& c) {
  if (!is_cyclic(c)) throw UsageError("only cyclic colorings have a circulant certificate");
  Certificate cert;
  cert.order = c.order();
  for (int p = 1; 2 * p <= c.order(); ++p)
    if (c.colors().test(static_cast<std::size_t>(p - 1))) cert.connection_set.push_back(p);
  return cert;
}

DistanceColoring relabel(const DistanceColoring& c, int multiplier) {
  const int n = c.order();
  if (!is_cyclic(c)) throw UsageError("relabel needs a cyclic coloring");
  int m = multiplier % n;
  if (m < 0) m += n;
  if (std::gcd(m, n) != 1) throw UsageError("relabel multiplier must be coprime with the order");
  BitMask out(static_cast<std::size_t>(n - 1));
  int p = m;  // M*(x+1) mod N
  for (int x = 0; x < n - 1; ++x) {
    if (c.colors().test(static_cast<std::size_t>(p - 1))) out.set(static_cast<std::size_t>(x));
    p += m;
    if (p >= n) p -= n;
  }
  return DistanceColoring(n, std::move(out));
}

std::vector<int> relabel_multipliers(int order) {
  std::vector<int> ms;
  for (int m = 1; 2 * m <= order; ++m)
    if (std::gcd(m, order) == 1) ms.push_back(m);
  if (ms.empty()) ms.push_back(1);
  return ms;
}

std::vector<DistanceColoring> relabel_orbit(const DistanceColoring& c) {
  std::set<BitMask> seen;
  std::vector<DistanceColoring> out;
  for (int m : relabel_multipliers(c.order())) {
    DistanceColoring r = relabel(c, m);
    if (seen.insert(r.colors()).second) out.push_back(std::move(r));
  }
  return out;
}

BitMask canonical_form(const DistanceColoring& c, bool reflect_colors) {
  if (!is_cyclic(c)) throw UsageError("canonical form is defined for cyclic colorings only");
  std::optional<BitMask> best;
  auto consider = [&](const BitMask& m) {
    if (!best || m < *best) best = m;
  };
  for (int m : relabel_multipliers(c.order())) {
    DistanceColoring r = relabel(c, m);
    consider(r.colors());
    if (reflect_colors) consider(r.colors().complement());
  }
  return *best;
}

}  // namespace ramsey
