#include "resurgence/graph_corpus.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "resurgence/graph_invariants.hpp"

namespace resurgence {

namespace {

// Edge bit layout: pair (a, b) with a < b gets index into the triangular
// enumeration, so a labeled graph on n vertices is one bitmask.
int edge_index(int a, int b, int n) {
  if (a > b) std::swap(a, b);
  return a * n - a * (a + 1) / 2 + (b - a - 1);
}

Graph graph_from_mask(std::uint64_t mask, int n) {
  std::vector<std::pair<int, int>> edges;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if ((mask >> edge_index(a, b, n)) & 1) edges.push_back({a, b});
  return Graph(VariableSet::numbered(n), std::move(edges));
}

}  // namespace

std::vector<Graph> all_graphs_up_to_iso(int max_n, bool connected_only) {
  if (max_n > 8) throw std::invalid_argument("all_graphs_up_to_iso: max_n too large");
  std::vector<Graph> out;
  for (int n = 2; n <= max_n; ++n) {
    const int m = n * (n - 1) / 2;
    std::vector<std::vector<int>> perms;
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
      perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    // Per permutation, where each edge bit moves.
    std::vector<std::vector<int>> bit_image(perms.size(), std::vector<int>(m));
    for (size_t pi = 0; pi < perms.size(); ++pi)
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
          bit_image[pi][edge_index(a, b, n)] = edge_index(perms[pi][a], perms[pi][b], n);

    for (std::uint64_t mask = 0; mask < (1ULL << m); ++mask) {
      bool canonical = true;
      for (size_t pi = 0; pi < perms.size() && canonical; ++pi) {
        std::uint64_t image = 0;
        for (int e = 0; e < m; ++e)
          if ((mask >> e) & 1) image |= (1ULL << bit_image[pi][e]);
        if (image < mask) canonical = false;
      }
      if (!canonical) continue;
      Graph g = graph_from_mask(mask, n);
      if (g.has_isolated_vertex()) continue;
      if (connected_only && !is_connected(g)) continue;
      out.push_back(std::move(g));
    }
  }
  return out;
}

Graph random_connected_graph(std::mt19937& rng, int min_n, int max_n) {
  std::uniform_int_distribution<int> size_dist(min_n, max_n);
  std::uniform_real_distribution<double> p_dist(0.3, 0.7);
  while (true) {
    int n = size_dist(rng);
    double p = p_dist(rng);
    std::vector<std::pair<int, int>> edges;
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (coin(rng) < p) edges.push_back({a, b});
    Graph g(VariableSet::numbered(n), std::move(edges));
    if (!g.has_isolated_vertex() && is_connected(g)) return g;
  }
}

}  // namespace resurgence
