#pragma once

// Test-only oracles, kept independent of the implementation paths they
// check: brute-force power membership, brute-force colon, exhaustive cover
// enumeration, exhaustive coloring.

#include <algorithm>
#include <functional>
#include <vector>

#include "resurgence/graph.hpp"
#include "resurgence/monomial_ideal.hpp"

namespace oracles {

using resurgence::Graph;
using resurgence::Monomial;
using resurgence::MonomialIdeal;

/// All t-fold products of generators, no minimalization.
inline std::vector<Monomial> power_products(const MonomialIdeal& I, int t) {
  std::vector<Monomial> current{Monomial::unit(I.ambient().count())};
  for (int i = 0; i < t; ++i) {
    std::vector<Monomial> next;
    for (const Monomial& prefix : current)
      for (const Monomial& g : I.generators()) next.push_back(prefix * g);
    current = std::move(next);
  }
  return current;
}

/// m ∈ I^t by scanning every t-fold product.
inline bool member_of_power_bruteforce(const MonomialIdeal& I, const Monomial& m, int t) {
  for (const Monomial& prod : power_products(I, t))
    if (prod.divides(m)) return true;
  return false;
}

inline int alpha_bruteforce_power(const MonomialIdeal& I, int t) {
  int best = -1;
  for (const Monomial& prod : power_products(I, t))
    if (best < 0 || prod.degree() < best) best = prod.degree();
  return best;
}

/// The colon ideal by definition: w ∈ I : m iff w·m ∈ I, checked pointwise.
inline bool colon_contains_bruteforce(const MonomialIdeal& I, const Monomial& m,
                                      const Monomial& w) {
  return resurgence::contains_monomial(I, w * m);
}

/// Exhaustive inclusion-minimal vertex covers by subset scan.
inline std::vector<std::vector<int>> minimal_covers_bruteforce(const Graph& g) {
  const int n = g.n();
  auto is_cover = [&](unsigned mask) {
    for (auto [a, b] : g.edges())
      if (!((mask >> a) & 1) && !((mask >> b) & 1)) return false;
    return true;
  };
  std::vector<unsigned> covers;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (!is_cover(mask)) continue;
    bool minimal = true;
    for (int v = 0; v < n && minimal; ++v)
      if ((mask >> v) & 1 && is_cover(mask & ~(1u << v))) minimal = false;
    if (minimal) covers.push_back(mask);
  }
  std::vector<std::vector<int>> out;
  for (unsigned mask : covers) {
    std::vector<int> c;
    for (int v = 0; v < n; ++v)
      if ((mask >> v) & 1) c.push_back(v);
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Exhaustive proper-coloring feasibility.
inline bool colorable_bruteforce(const Graph& g, int k) {
  std::vector<int> color(g.n(), -1);
  std::function<bool(int)> rec = [&](int v) {
    if (v == g.n()) return true;
    for (int c = 0; c < k; ++c) {
      bool ok = true;
      for (int w : g.neighbors(v))
        if (color[w] == c) { ok = false; break; }
      if (!ok) continue;
      color[v] = c;
      if (rec(v + 1)) return true;
      color[v] = -1;
    }
    return false;
  };
  return rec(0);
}

}  // namespace oracles
