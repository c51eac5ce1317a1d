#pragma once

#include <random>
#include <vector>

#include "resurgence/graph.hpp"

namespace resurgence {

/// All graphs on at most max_n vertices without isolated vertices, one per
/// isomorphism class (canonical form = least adjacency bitmask over vertex
/// permutations).  max_n <= 8.
std::vector<Graph> all_graphs_up_to_iso(int max_n, bool connected_only);

/// Random connected graph without isolated vertices on min_n..max_n vertices.
Graph random_connected_graph(std::mt19937& rng, int min_n, int max_n);

}  // namespace resurgence
