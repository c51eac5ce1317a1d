#pragma once

#include <optional>
#include <vector>

#include "resurgence/graph.hpp"

namespace resurgence {

/// Hard guard for the exact NP-hard solvers (chromatic number, cliques,
/// independent sets); larger inputs are rejected rather than silently slow.
inline constexpr int kExactSolverVertexGuard = 24;

bool is_connected(const Graph& g);
std::vector<std::vector<int>> connected_components(const Graph& g);

/// All inclusion-minimal vertex covers.  Rejects graphs with isolated
/// vertices.
std::vector<std::vector<int>> minimal_vertex_covers(const Graph& g);

/// Exact chromatic number via branch and bound (clique lower bound, greedy
/// upper bound).  Returns 1 for an edgeless graph.
int chromatic_number(const Graph& g);

/// Least number of colors such that no hyperedge is monochromatic.
int hypergraph_chromatic_number(const Hypergraph& h);

int clique_number(const Graph& g);
int independence_number(const Graph& g);
/// One maximum independent set (canonical: the lexicographically least among
/// the largest).
std::vector<int> maximum_independent_set(const Graph& g);

struct BipartiteResult {
  bool bipartite = false;
  std::vector<int> coloring;        // 0/1 per vertex when bipartite
  std::vector<int> odd_closed_walk; // witness cycle when not bipartite
};
BipartiteResult is_bipartite(const Graph& g);

Graph induced_subgraph(const Graph& g, const std::vector<int>& verts);

/// All induced (chordless) cycles of odd length, each as a canonical vertex
/// sequence; optionally restricted to one length.  Exhaustive.
std::vector<std::vector<int>> induced_odd_cycles(const Graph& g,
                                                 std::optional<int> length = std::nullopt);

struct BlockDecomposition {
  std::vector<std::vector<int>> blocks;  // vertex sets, canonically sorted
  std::vector<int> cut_vertices;
};
/// Requires a connected graph.
BlockDecomposition blocks_and_cut_vertices(const Graph& g);

/// Every block is an edge or a cycle.
bool is_cactus(const Graph& g);

/// Recursive clique-separator decomposition; atoms have no clique separator.
/// Separator search order: smallest clique first, ties lexicographic, so the
/// atom list is deterministic.  Requires a connected graph.
std::vector<std::vector<int>> clique_separator_atoms(const Graph& g);

/// Minimum shortest-path distance between two nonempty vertex sets; 0 when
/// they intersect.
int subgraph_distance(const Graph& g, const std::vector<int>& a, const std::vector<int>& b);

/// Maximum number of induced (2n+1)-cycles pairwise at distance >= 2:
/// the independence number of the conflict graph whose edges join cycles at
/// distance <= 1.  Rejects graphs without (2n+1)-cycles.
int k_n(const Graph& g, int n);

/// Complement graph (same vertex set).
Graph complement(const Graph& g);

/// Join of two graphs: disjoint union plus all cross edges.
Graph graph_join(const Graph& a, const Graph& b);

/// Part sizes when the graph is complete multipartite, sorted ascending.
std::optional<std::vector<int>> complete_multipartite_parts(const Graph& g);

}  // namespace resurgence
