#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "resurgence/variable_set.hpp"

namespace resurgence {

/// Finite simple graph: no loops, no multi-edges.  Isolated vertices are
/// representable; operations whose hypotheses exclude them check explicitly.
class Graph {
public:
  Graph() = default;
  Graph(VariableSet vertices, std::vector<std::pair<int, int>> edges);

  int n() const { return vertices_.count(); }
  const VariableSet& vertices() const { return vertices_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  bool adjacent(int a, int b) const { return (adj_[a] >> b) & 1; }
  std::uint64_t adjacency_mask(int v) const { return adj_[v]; }
  std::vector<int> neighbors(int v) const;
  int degree(int v) const;
  bool has_isolated_vertex() const;

  bool operator==(const Graph& o) const {
    return vertices_ == o.vertices_ && edges_ == o.edges_;
  }

private:
  VariableSet vertices_;
  std::vector<std::pair<int, int>> edges_;  // each (a, b) with a < b, sorted
  std::vector<std::uint64_t> adj_;
};

/// Hypergraph with edges of size >= 2, no edge contained in another.
class Hypergraph {
public:
  Hypergraph() = default;
  Hypergraph(VariableSet vertices, std::vector<std::vector<int>> edges);

  int n() const { return vertices_.count(); }
  const VariableSet& vertices() const { return vertices_; }
  const std::vector<std::vector<int>>& edges() const { return edges_; }

private:
  VariableSet vertices_;
  std::vector<std::vector<int>> edges_;  // each sorted; list sorted
};

/// Text format: a `vertices: a b c` line, then one `edge: a b [c ...]` line
/// per edge.  Two-vertex edges give a graph; anything larger a hypergraph.
Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);
Hypergraph read_hypergraph(std::istream& in);
Hypergraph read_hypergraph_file(const std::string& path);
void write_graph(std::ostream& out, const Graph& g);
void write_hypergraph(std::ostream& out, const Hypergraph& h);

/// JSON equivalent: {"vertices": [...], "edges": [[...], ...]}.
Graph graph_from_json(const std::string& text);
Hypergraph hypergraph_from_json(const std::string& text);
std::string graph_to_json(const Graph& g);

}  // namespace resurgence
