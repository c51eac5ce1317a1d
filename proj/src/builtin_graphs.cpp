#include "resurgence/builtin_graphs.hpp"

#include <algorithm>
#include <stdexcept>

#include "resurgence/graph_invariants.hpp"

namespace resurgence {

namespace {

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return Graph(VariableSet::numbered(n), std::move(edges));
}

Graph path_graph(int n) {
  if (n < 2) throw std::invalid_argument("path needs at least 2 vertices");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph(VariableSet::numbered(n), std::move(edges));
}

Graph complete_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) edges.push_back({a, b});
  return Graph(VariableSet::numbered(n), std::move(edges));
}

Graph complete_multipartite(const std::vector<int>& parts) {
  int total = 0;
  std::vector<int> part_of;
  for (size_t i = 0; i < parts.size(); ++i) {
    total += parts[i];
    for (int j = 0; j < parts[i]; ++j) part_of.push_back((int)i);
  }
  std::vector<std::pair<int, int>> edges;
  for (int a = 0; a < total; ++a)
    for (int b = a + 1; b < total; ++b)
      if (part_of[a] != part_of[b]) edges.push_back({a, b});
  return Graph(VariableSet::numbered(total), std::move(edges));
}

Graph petersen() {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 5; ++i) {
    edges.push_back({i, (i + 1) % 5});          // outer cycle
    edges.push_back({i, i + 5});                // spokes
    edges.push_back({i + 5, (i + 2) % 5 + 5});  // inner pentagram
  }
  return Graph(VariableSet::numbered(10), std::move(edges));
}

// Triangles joined in a row by two-edge bridges: k triangles, k-1 bridge
// vertices, consecutive triangles at distance exactly two.
Graph triangle_chain(int k) {
  std::vector<std::pair<int, int>> edges;
  int v = 0;
  std::vector<int> tail;  // last vertex of each triangle
  for (int i = 0; i < k; ++i) {
    int a = v, b = v + 1, c = v + 2;
    v += 3;
    edges.push_back({a, b});
    edges.push_back({a, c});
    edges.push_back({b, c});
    if (i > 0) {
      int bridge = v;
      v += 1;
      edges.push_back({tail.back(), bridge});
      edges.push_back({bridge, a});
    }
    tail.push_back(c);
  }
  // Re-number so vertex ids are contiguous in creation order.
  return Graph(VariableSet::numbered(v), std::move(edges));
}

Graph bowtie() {
  // Two triangles sharing vertex x1.
  return Graph(VariableSet::numbered(5),
               {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}});
}

Graph triangle_c4_edge() {
  // Triangle {x1,x2,x3} and 4-cycle x2-x3-x4-x5 glued along the edge {x2,x3}.
  return Graph(VariableSet::numbered(5),
               {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {3, 4}, {2, 4}});
}

Graph cactus_c5_c4() {
  // C5 sharing vertex x5 with a C4, plus a pendant edge at x1: a cactus whose
  // only odd cycle has length five.
  return Graph(VariableSet::numbered(10),
               {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},          // C5
                {4, 5}, {5, 6}, {6, 7}, {7, 4},                  // C4 at x5
                {0, 8}, {8, 9}});                                // pendant path
}

std::vector<int> parse_part_list(const std::string& spec) {
  std::vector<int> parts;
  size_t pos = 0;
  while (pos < spec.size()) {
    size_t next = spec.find('_', pos);
    std::string tok = spec.substr(pos, next == std::string::npos ? next : next - pos);
    parts.push_back(std::stoi(tok));
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return parts;
}

}  // namespace

Graph builtin_graph(const std::string& name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(), ::tolower);
  try {
    if (lower.size() > 1 && (lower[0] == 'c') && isdigit(lower[1]))
      return cycle_graph(std::stoi(lower.substr(1)));
    if (lower.size() > 1 && (lower[0] == 'p') && isdigit(lower[1]))
      return path_graph(std::stoi(lower.substr(1)));
    if (lower.size() > 1 && lower[0] == 'k' && isdigit(lower[1])) {
      auto parts = parse_part_list(lower.substr(1));
      if (parts.size() == 1) return complete_graph(parts[0]);
      return complete_multipartite(parts);
    }
  } catch (const std::exception&) {
    throw std::invalid_argument("unknown builtin graph: " + name);
  }
  if (lower == "petersen") return petersen();
  if (lower == "bowtie") return bowtie();
  if (lower == "two-triangles-d2") return triangle_chain(2);
  if (lower == "three-triangles-d2") return triangle_chain(3);
  if (lower == "triangle-c4-edge") return triangle_c4_edge();
  if (lower == "cactus-c5-c4") return cactus_c5_c4();
  if (lower == "join-k1c-c4") return graph_join(Graph(VariableSet::numbered(1, "u"), {}),
                                                cycle_graph(4));
  if (lower == "join-k2c-c4") return graph_join(Graph(VariableSet::numbered(2, "u"), {}),
                                                cycle_graph(4));
  throw std::invalid_argument("unknown builtin graph: " + name);
}

std::vector<std::string> builtin_graph_names() {
  return {"C<n>",          "K<n>",
          "K<a>_<b>...",   "P<n>",
          "petersen",      "bowtie",
          "two-triangles-d2", "three-triangles-d2",
          "triangle-c4-edge", "cactus-c5-c4",
          "join-k1c-c4",   "join-k2c-c4"};
}

}  // namespace resurgence
