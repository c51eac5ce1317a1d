#include "resurgence/graph_ideals.hpp"

#include <stdexcept>

#include "resurgence/graph_invariants.hpp"

namespace resurgence {

namespace {

Monomial squarefree_monomial(const std::vector<int>& support, int nvars) {
  std::vector<int> e(nvars, 0);
  for (int v : support) e[v] = 1;
  return Monomial(std::move(e));
}

}  // namespace

MonomialIdeal edge_ideal(const Graph& g) {
  if (g.has_isolated_vertex())
    throw std::invalid_argument("edge_ideal: isolated vertex present");
  std::vector<Monomial> gens;
  gens.reserve(g.edges().size());
  for (auto [a, b] : g.edges()) gens.push_back(squarefree_monomial({a, b}, g.n()));
  return MonomialIdeal::make(g.vertices(), std::move(gens));
}

MonomialIdeal cover_ideal(const Graph& g) {
  if (g.has_isolated_vertex())
    throw std::invalid_argument("cover_ideal: isolated vertex present");
  std::vector<Monomial> gens;
  for (const auto& cover : minimal_vertex_covers(g))
    gens.push_back(squarefree_monomial(cover, g.n()));
  return MonomialIdeal::make(g.vertices(), std::move(gens));
}

MonomialIdeal cover_ideal(const Hypergraph& h) {
  std::vector<Monomial> gens;
  for (const auto& cover : minimal_transversals(h.edges(), h.n()))
    gens.push_back(squarefree_monomial(cover, h.n()));
  return MonomialIdeal::make(h.vertices(), std::move(gens));
}

Hypergraph hypergraph_of_ideal(const MonomialIdeal& I) {
  if (!is_squarefree(I)) throw std::invalid_argument("hypergraph_of_ideal: not squarefree");
  if (I.is_zero() || I.is_unit())
    throw std::invalid_argument("hypergraph_of_ideal: ideal must be proper and nonzero");
  auto primes = minimal_primes(I);
  for (const auto& p : primes)
    if (p.size() < 2)
      throw std::invalid_argument("hypergraph_of_ideal: minimal prime of height one");
  return Hypergraph(I.ambient(), std::move(primes));
}

}  // namespace resurgence
