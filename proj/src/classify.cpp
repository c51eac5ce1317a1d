#include "resurgence/classify.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "resurgence/graph_invariants.hpp"

namespace resurgence {

std::string kind_name(GraphKind k) {
  switch (k) {
    case GraphKind::Bipartite: return "bipartite";
    case GraphKind::OddCycle: return "odd_cycle";
    case GraphKind::Cactus: return "cactus";
    case GraphKind::CliquesumBipartiteOddCycles: return "cliquesum_bipartite_oddcycles";
    case GraphKind::CompleteMultipartite: return "complete_multipartite";
    case GraphKind::ChiEqualsOmega: return "chi_equals_omega";
    case GraphKind::Unknown: return "unknown";
  }
  return "unknown";
}

namespace {

bool is_single_cycle(const Graph& g) {
  if (g.n() < 3 || g.edges().size() != (size_t)g.n()) return false;
  for (int v = 0; v < g.n(); ++v)
    if (g.degree(v) != 2) return false;
  return is_connected(g);
}

bool atom_is_odd_cycle(const Graph& g, const std::vector<int>& atom) {
  Graph sub = induced_subgraph(g, atom);
  return is_single_cycle(sub) && sub.n() % 2 == 1;
}

}  // namespace

GraphClassification classify(const Graph& g) {
  if (!is_connected(g)) throw std::invalid_argument("classify: disconnected input");
  if (g.has_isolated_vertex()) throw std::invalid_argument("classify: isolated vertex present");

  GraphClassification c;
  c.chi = chromatic_number(g);
  c.omega = clique_number(g);
  c.chi_equals_omega = (c.chi == c.omega);
  c.cactus = is_cactus(g);
  c.atoms = clique_separator_atoms(g);

  BipartiteResult bip = is_bipartite(g);
  if (bip.bipartite) c.bipartition = bip.coloring;

  auto odd_cycles = induced_odd_cycles(g);
  if (!odd_cycles.empty()) {
    size_t shortest = odd_cycles.front().size();
    for (const auto& cyc : odd_cycles) shortest = std::min(shortest, cyc.size());
    c.smallest_odd_cycle_length = (int)shortest;
  }

  // Clique-sum of bipartite graphs and odd cycles: every atom bipartite or an
  // induced odd cycle, with at least one odd cycle present.
  bool atoms_fit = true;
  for (const auto& atom : c.atoms) {
    Graph sub = induced_subgraph(g, atom);
    if (is_bipartite(sub).bipartite) continue;
    if (atom_is_odd_cycle(g, atom)) continue;
    atoms_fit = false;
    break;
  }
  if (atoms_fit && !bip.bipartite) {
    OddCycleClassData data;
    std::vector<int> lengths;
    for (const auto& cyc : odd_cycles) lengths.push_back((int)cyc.size());
    std::sort(lengths.begin(), lengths.end());
    lengths.erase(std::unique(lengths.begin(), lengths.end()), lengths.end());
    for (int len : lengths) {
      int n = (len - 1) / 2;
      data.half_lengths.push_back(n);
      data.k_by_half_length[n] = k_n(g, n);
    }
    c.in_cliquesum_class = true;
    c.class_data = std::move(data);
  }

  c.multipartite_parts = complete_multipartite_parts(g);

  if (bip.bipartite) {
    c.kind = GraphKind::Bipartite;
  } else if (is_single_cycle(g)) {
    c.kind = GraphKind::OddCycle;
    c.odd_cycle_length = g.n();
  } else if (c.in_cliquesum_class) {
    // Every non-bipartite cactus also lands here (its blocks are cycles and
    // edges); the class kind carries strictly more data, so it wins.
    c.kind = GraphKind::CliquesumBipartiteOddCycles;
  } else if (c.cactus) {
    c.kind = GraphKind::Cactus;
  } else if (c.multipartite_parts) {
    c.kind = GraphKind::CompleteMultipartite;
  } else if (c.chi_equals_omega) {
    c.kind = GraphKind::ChiEqualsOmega;
  } else {
    c.kind = GraphKind::Unknown;
  }
  return c;
}

bool verify_classification(const Graph& g, const GraphClassification& c) {
  if (c.bipartition) {
    if ((int)c.bipartition->size() != g.n()) return false;
    for (auto [a, b] : g.edges())
      if ((*c.bipartition)[a] == (*c.bipartition)[b]) return false;
  }
  if (c.odd_cycle_length && (!is_single_cycle(g) || g.n() != *c.odd_cycle_length)) return false;
  if (c.cactus != is_cactus(g)) return false;
  // Atoms: each must be free of clique separators and together cover the
  // edge set (atoms may share separator edges).
  std::set<std::pair<int, int>> covered;
  for (const auto& atom : c.atoms) {
    Graph sub = induced_subgraph(g, atom);
    if (clique_separator_atoms(sub).size() != 1) return false;
    for (auto [a, b] : sub.edges()) covered.insert({atom[a], atom[b]});
  }
  if (covered.size() != g.edges().size()) return false;
  if (c.in_cliquesum_class) {
    for (const auto& atom : c.atoms) {
      Graph sub = induced_subgraph(g, atom);
      if (!is_bipartite(sub).bipartite && !atom_is_odd_cycle(g, atom)) return false;
    }
    if (!c.class_data || c.class_data->half_lengths.empty()) return false;
    for (int n : c.class_data->half_lengths)
      if (induced_odd_cycles(g, 2 * n + 1).empty()) return false;
  }
  if (c.multipartite_parts && complete_multipartite_parts(g) != c.multipartite_parts)
    return false;
  if (c.chi != chromatic_number(g) || c.omega != clique_number(g)) return false;
  return true;
}

}  // namespace resurgence
