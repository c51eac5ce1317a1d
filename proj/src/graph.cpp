#include "resurgence/graph.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace resurgence {

Graph::Graph(VariableSet vertices, std::vector<std::pair<int, int>> edges)
    : vertices_(std::move(vertices)) {
  const int n = vertices_.count();
  if (n > 64) throw std::invalid_argument("graphs are limited to 64 vertices");
  adj_.assign(n, 0);
  std::set<std::pair<int, int>> seen;
  for (auto [a, b] : edges) {
    if (a < 0 || b < 0 || a >= n || b >= n)
      throw std::invalid_argument("edge endpoint out of range");
    if (a == b) throw std::invalid_argument("loops are not allowed");
    if (a > b) std::swap(a, b);
    if (!seen.insert({a, b}).second) throw std::invalid_argument("multi-edge");
    adj_[a] |= (1ULL << b);
    adj_[b] |= (1ULL << a);
  }
  edges_.assign(seen.begin(), seen.end());
}

std::vector<int> Graph::neighbors(int v) const {
  std::vector<int> out;
  for (int i = 0; i < n(); ++i)
    if (adjacent(v, i)) out.push_back(i);
  return out;
}

int Graph::degree(int v) const { return (int)__builtin_popcountll(adj_[v]); }

bool Graph::has_isolated_vertex() const {
  for (int v = 0; v < n(); ++v)
    if (adj_[v] == 0) return true;
  return n() == 0;
}

Hypergraph::Hypergraph(VariableSet vertices, std::vector<std::vector<int>> edges)
    : vertices_(std::move(vertices)) {
  const int n = vertices_.count();
  for (auto& e : edges) {
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
    if (e.size() < 2) throw std::invalid_argument("hypergraph edge smaller than 2");
    for (int v : e)
      if (v < 0 || v >= n) throw std::invalid_argument("hyperedge vertex out of range");
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  for (const auto& a : edges)
    for (const auto& b : edges)
      if (&a != &b && std::includes(b.begin(), b.end(), a.begin(), a.end()))
        throw std::invalid_argument("hyperedge contained in another");
  edges_ = std::move(edges);
}

namespace {

struct ParsedLines {
  std::vector<std::string> vertex_names;
  std::vector<std::vector<std::string>> edge_names;
};

ParsedLines parse_lines(std::istream& in) {
  ParsedLines out;
  std::string line;
  bool have_vertices = false;
  while (std::getline(in, line)) {
    std::istringstream ss(line);
    std::string head;
    if (!(ss >> head)) continue;
    if (head == "vertices:") {
      std::string t;
      while (ss >> t) out.vertex_names.push_back(t);
      have_vertices = true;
    } else if (head == "edge:") {
      std::vector<std::string> e;
      std::string t;
      while (ss >> t) e.push_back(t);
      out.edge_names.push_back(std::move(e));
    } else if (head[0] == '#') {
      continue;
    } else {
      throw std::invalid_argument("graph input: unexpected line: " + line);
    }
  }
  if (!have_vertices) throw std::invalid_argument("graph input: missing vertices: line");
  return out;
}

std::vector<int> to_indices(const VariableSet& vars, const std::vector<std::string>& names) {
  std::vector<int> idx;
  for (const auto& name : names) {
    int i = vars.index_of(name);
    if (i < 0) throw std::invalid_argument("graph input: unknown vertex " + name);
    idx.push_back(i);
  }
  return idx;
}

}  // namespace

Graph read_graph(std::istream& in) {
  ParsedLines p = parse_lines(in);
  VariableSet vars(p.vertex_names);
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : p.edge_names) {
    if (e.size() != 2) throw std::invalid_argument("graph input: edge is not a pair");
    auto idx = to_indices(vars, e);
    edges.push_back({idx[0], idx[1]});
  }
  return Graph(std::move(vars), std::move(edges));
}

Hypergraph read_hypergraph(std::istream& in) {
  ParsedLines p = parse_lines(in);
  VariableSet vars(p.vertex_names);
  std::vector<std::vector<int>> edges;
  for (const auto& e : p.edge_names) edges.push_back(to_indices(vars, e));
  return Hypergraph(std::move(vars), std::move(edges));
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open graph file: " + path);
  return read_graph(in);
}

Hypergraph read_hypergraph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open hypergraph file: " + path);
  return read_hypergraph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
  out << "vertices:";
  for (const auto& name : g.vertices().names()) out << " " << name;
  out << "\n";
  for (auto [a, b] : g.edges())
    out << "edge: " << g.vertices().name(a) << " " << g.vertices().name(b) << "\n";
}

void write_hypergraph(std::ostream& out, const Hypergraph& h) {
  out << "vertices:";
  for (const auto& name : h.vertices().names()) out << " " << name;
  out << "\n";
  for (const auto& e : h.edges()) {
    out << "edge:";
    for (int v : e) out << " " << h.vertices().name(v);
    out << "\n";
  }
}

namespace {

ParsedLines parse_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  ParsedLines out;
  for (const auto& v : j.at("vertices")) out.vertex_names.push_back(v.get<std::string>());
  for (const auto& e : j.at("edges")) {
    std::vector<std::string> names;
    for (const auto& v : e) names.push_back(v.get<std::string>());
    out.edge_names.push_back(std::move(names));
  }
  return out;
}

}  // namespace

Graph graph_from_json(const std::string& text) {
  ParsedLines p = parse_json(text);
  VariableSet vars(p.vertex_names);
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : p.edge_names) {
    if (e.size() != 2) throw std::invalid_argument("json graph: edge is not a pair");
    auto idx = to_indices(vars, e);
    edges.push_back({idx[0], idx[1]});
  }
  return Graph(std::move(vars), std::move(edges));
}

Hypergraph hypergraph_from_json(const std::string& text) {
  ParsedLines p = parse_json(text);
  VariableSet vars(p.vertex_names);
  std::vector<std::vector<int>> edges;
  for (const auto& e : p.edge_names) edges.push_back(to_indices(vars, e));
  return Hypergraph(std::move(vars), std::move(edges));
}

std::string graph_to_json(const Graph& g) {
  nlohmann::json j;
  j["vertices"] = g.vertices().names();
  auto edges = nlohmann::json::array();
  for (auto [a, b] : g.edges())
    edges.push_back({g.vertices().name(a), g.vertices().name(b)});
  j["edges"] = edges;
  return j.dump();
}

}  // namespace resurgence
