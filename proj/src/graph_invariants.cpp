#include "resurgence/graph_invariants.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <set>
#include <stdexcept>

#include "resurgence/monomial_ideal.hpp"

namespace resurgence {

namespace {

void check_guard(const Graph& g) {
  if (g.n() > kExactSolverVertexGuard)
    throw std::invalid_argument("exact solver vertex guard exceeded");
}

std::uint64_t full_mask(int n) { return n == 64 ? ~0ULL : (1ULL << n) - 1; }

}  // namespace

bool is_connected(const Graph& g) {
  if (g.n() == 0) return true;
  return connected_components(g).size() == 1;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  std::vector<std::vector<int>> comps;
  std::vector<bool> seen(g.n(), false);
  for (int s = 0; s < g.n(); ++s) {
    if (seen[s]) continue;
    std::vector<int> comp;
    std::queue<int> q;
    q.push(s);
    seen[s] = true;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      comp.push_back(v);
      for (int w : g.neighbors(v))
        if (!seen[w]) { seen[w] = true; q.push(w); }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

std::vector<std::vector<int>> minimal_vertex_covers(const Graph& g) {
  if (g.has_isolated_vertex())
    throw std::invalid_argument("minimal_vertex_covers: isolated vertex present");
  std::vector<std::vector<int>> edge_sets;
  edge_sets.reserve(g.edges().size());
  for (auto [a, b] : g.edges()) edge_sets.push_back({a, b});
  return minimal_transversals(edge_sets, g.n());
}

namespace {

// Bron-Kerbosch with pivoting over bitmask vertex sets.
void bron_kerbosch(const Graph& g, std::uint64_t r, std::uint64_t p, std::uint64_t x,
                   const std::function<void(std::uint64_t)>& report) {
  if (p == 0 && x == 0) {
    report(r);
    return;
  }
  std::uint64_t px = p | x;
  int pivot = -1, best = -1;
  for (int v = 0; v < g.n(); ++v) {
    if (!((px >> v) & 1)) continue;
    int cnt = __builtin_popcountll(p & g.adjacency_mask(v));
    if (cnt > best) { best = cnt; pivot = v; }
  }
  std::uint64_t candidates = p & ~g.adjacency_mask(pivot);
  for (int v = 0; v < g.n(); ++v) {
    if (!((candidates >> v) & 1)) continue;
    std::uint64_t vb = 1ULL << v;
    bron_kerbosch(g, r | vb, p & g.adjacency_mask(v), x & g.adjacency_mask(v), report);
    p &= ~vb;
    x |= vb;
  }
}

}  // namespace

int clique_number(const Graph& g) {
  check_guard(g);
  if (g.n() == 0) return 0;
  int best = 0;
  bron_kerbosch(g, 0, full_mask(g.n()), 0, [&](std::uint64_t clique) {
    best = std::max(best, __builtin_popcountll(clique));
  });
  return best;
}

int independence_number(const Graph& g) { return clique_number(complement(g)); }

std::vector<int> maximum_independent_set(const Graph& g) {
  check_guard(g);
  Graph comp = complement(g);
  std::uint64_t best_mask = 0;
  int best = -1;
  bron_kerbosch(comp, 0, full_mask(comp.n()), 0, [&](std::uint64_t clique) {
    int size = __builtin_popcountll(clique);
    if (size > best || (size == best && clique < best_mask)) {
      best = size;
      best_mask = clique;
    }
  });
  std::vector<int> out;
  for (int v = 0; v < g.n(); ++v)
    if ((best_mask >> v) & 1) out.push_back(v);
  return out;
}

namespace {

// Greedy coloring in degree order; upper bound for chi.
int greedy_chromatic(const Graph& g) {
  std::vector<int> order(g.n());
  for (int i = 0; i < g.n(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return g.degree(a) > g.degree(b); });
  std::vector<int> color(g.n(), -1);
  int used = 0;
  for (int v : order) {
    std::uint64_t taken = 0;
    for (int w : g.neighbors(v))
      if (color[w] >= 0) taken |= (1ULL << color[w]);
    int c = 0;
    while ((taken >> c) & 1) ++c;
    color[v] = c;
    used = std::max(used, c + 1);
  }
  return used;
}

bool k_colorable(const Graph& g, int k) {
  std::vector<int> order(g.n());
  for (int i = 0; i < g.n(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return g.degree(a) > g.degree(b); });
  std::vector<int> color(g.n(), -1);
  // Standard backtracking with symmetry breaking: a vertex may open at most
  // one new color beyond those already in use.
  std::function<bool(int, int)> rec = [&](int idx, int used) {
    if (idx == g.n()) return true;
    int v = order[idx];
    std::uint64_t taken = 0;
    for (int w : g.neighbors(v))
      if (color[w] >= 0) taken |= (1ULL << color[w]);
    int limit = std::min(k, used + 1);
    for (int c = 0; c < limit; ++c) {
      if ((taken >> c) & 1) continue;
      color[v] = c;
      if (rec(idx + 1, std::max(used, c + 1))) return true;
      color[v] = -1;
    }
    return false;
  };
  return rec(0, 0);
}

}  // namespace

int chromatic_number(const Graph& g) {
  check_guard(g);
  if (g.edges().empty()) return 1;  // edgeless: one color suffices
  int lower = clique_number(g);
  int upper = greedy_chromatic(g);
  for (int k = lower; k < upper; ++k)
    if (k_colorable(g, k)) return k;
  return upper;
}

int hypergraph_chromatic_number(const Hypergraph& h) {
  if (h.n() > kExactSolverVertexGuard)
    throw std::invalid_argument("exact solver vertex guard exceeded");
  if (h.edges().empty()) return 1;
  auto feasible = [&](int k) {
    std::vector<int> color(h.n(), -1);
    std::function<bool(int, int)> rec = [&](int v, int used) {
      if (v == h.n()) {
        for (const auto& e : h.edges()) {
          int c0 = color[e[0]];
          bool mono = true;
          for (int u : e)
            if (color[u] != c0) { mono = false; break; }
          if (mono) return false;
        }
        return true;
      }
      int limit = std::min(k, used + 1);
      for (int c = 0; c < limit; ++c) {
        color[v] = c;
        // Prune: an edge fully colored with one color fails now.
        bool ok = true;
        for (const auto& e : h.edges()) {
          bool complete = true, mono = true;
          for (int u : e) {
            if (color[u] < 0) { complete = false; break; }
            if (color[u] != color[e[0]]) mono = false;
          }
          if (complete && mono) { ok = false; break; }
        }
        if (ok && rec(v + 1, std::max(used, c + 1))) return true;
        color[v] = -1;
      }
      return false;
    };
    return rec(0, 0);
  };
  for (int k = 2;; ++k)
    if (feasible(k)) return k;
}

BipartiteResult is_bipartite(const Graph& g) {
  BipartiteResult res;
  res.coloring.assign(g.n(), -1);
  std::vector<int> parent(g.n(), -1);
  for (int s = 0; s < g.n(); ++s) {
    if (res.coloring[s] >= 0) continue;
    res.coloring[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int w : g.neighbors(v)) {
        if (res.coloring[w] < 0) {
          res.coloring[w] = 1 - res.coloring[v];
          parent[w] = v;
          q.push(w);
        } else if (res.coloring[w] == res.coloring[v]) {
          // Odd closed walk: paths to the BFS-tree meeting point plus edge vw.
          std::vector<int> pv, pw;
          for (int x = v; x != -1; x = parent[x]) pv.push_back(x);
          for (int x = w; x != -1; x = parent[x]) pw.push_back(x);
          std::reverse(pv.begin(), pv.end());
          std::reverse(pw.begin(), pw.end());
          size_t common = 0;
          while (common + 1 < pv.size() && common + 1 < pw.size() &&
                 pv[common + 1] == pw[common + 1])
            ++common;
          std::vector<int> walk(pv.begin() + common, pv.end());
          for (size_t i = pw.size(); i-- > common + 1;) walk.push_back(pw[i]);
          res.bipartite = false;
          res.coloring.clear();
          res.odd_closed_walk = std::move(walk);
          return res;
        }
      }
    }
  }
  res.bipartite = true;
  return res;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& verts) {
  std::vector<int> sorted(verts);
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<std::string> names;
  std::vector<int> index(g.n(), -1);
  for (int v : sorted) {
    if (v < 0 || v >= g.n()) throw std::invalid_argument("induced_subgraph: vertex out of range");
    index[v] = (int)names.size();
    names.push_back(g.vertices().name(v));
  }
  std::vector<std::pair<int, int>> edges;
  for (auto [a, b] : g.edges())
    if (index[a] >= 0 && index[b] >= 0) edges.push_back({index[a], index[b]});
  return Graph(VariableSet(std::move(names)), std::move(edges));
}

std::vector<std::vector<int>> induced_odd_cycles(const Graph& g, std::optional<int> length) {
  std::vector<std::vector<int>> cycles;
  std::vector<int> path;
  std::vector<bool> on_path(g.n(), false);
  // Grow chordless paths anchored at their minimum vertex s; every interior
  // vertex exceeds s and the second vertex stays below the last, so each
  // cycle is produced exactly once.
  std::function<void(int)> grow = [&](int s) {
    int last = path.back();
    for (int w = s + 1; w < g.n(); ++w) {
      if (on_path[w] || !g.adjacent(last, w)) continue;
      bool chord = false;
      for (size_t i = 0; i + 1 < path.size(); ++i)
        if (path[i] != s && g.adjacent(path[i], w)) { chord = true; break; }
      if (chord) continue;
      bool closes = g.adjacent(w, s);
      if (closes && path.size() >= 2) {
        if (path[1] < w) {
          size_t len = path.size() + 1;
          if (len % 2 == 1 && (!length || (int)len == *length)) {
            std::vector<int> cycle = path;
            cycle.push_back(w);
            cycles.push_back(std::move(cycle));
          }
        }
        // A closing vertex is adjacent to both ends; extending through it
        // would leave the chord (w, s), so do not extend.
        continue;
      }
      path.push_back(w);
      on_path[w] = true;
      grow(s);
      on_path[w] = false;
      path.pop_back();
    }
  };
  for (int s = 0; s < g.n(); ++s) {
    path = {s};
    std::fill(on_path.begin(), on_path.end(), false);
    on_path[s] = true;
    grow(s);
  }
  std::sort(cycles.begin(), cycles.end());
  return cycles;
}

namespace {

struct BlockState {
  int timer = 0;
  std::vector<int> tin, low;
  std::vector<std::pair<int, int>> stack;
  std::vector<std::vector<int>> blocks;
  std::set<int> cuts;
};

void block_dfs(const Graph& g, int v, int parent, BlockState& st) {
  st.tin[v] = st.low[v] = st.timer++;
  int children = 0;
  for (int w : g.neighbors(v)) {
    if (w == parent) continue;
    if (st.tin[w] >= 0) {
      st.low[v] = std::min(st.low[v], st.tin[w]);
      if (st.tin[w] < st.tin[v]) st.stack.push_back({v, w});
      continue;
    }
    st.stack.push_back({v, w});
    ++children;
    block_dfs(g, w, v, st);
    st.low[v] = std::min(st.low[v], st.low[w]);
    if (parent != -1 && st.low[w] >= st.tin[v]) st.cuts.insert(v);
    if (st.low[w] >= st.tin[v]) {
      // Pop one block off the edge stack.
      std::set<int> verts;
      while (true) {
        auto [a, b] = st.stack.back();
        st.stack.pop_back();
        verts.insert(a);
        verts.insert(b);
        if (a == v && b == w) break;
      }
      st.blocks.push_back(std::vector<int>(verts.begin(), verts.end()));
    }
  }
  if (parent == -1 && children > 1) st.cuts.insert(v);
}

}  // namespace

BlockDecomposition blocks_and_cut_vertices(const Graph& g) {
  if (!is_connected(g)) throw std::invalid_argument("blocks_and_cut_vertices: disconnected input");
  BlockState st;
  st.tin.assign(g.n(), -1);
  st.low.assign(g.n(), -1);
  if (g.n() > 0) block_dfs(g, 0, -1, st);
  BlockDecomposition out;
  out.blocks = std::move(st.blocks);
  std::sort(out.blocks.begin(), out.blocks.end());
  out.cut_vertices.assign(st.cuts.begin(), st.cuts.end());
  return out;
}

bool is_cactus(const Graph& g) {
  auto dec = blocks_and_cut_vertices(g);
  for (const auto& block : dec.blocks) {
    Graph sub = induced_subgraph(g, block);
    size_t m = sub.edges().size();
    if (block.size() == 2 && m == 1) continue;           // edge block
    if (m == block.size() && block.size() >= 3) {        // cycle block: 2-regular
      bool two_regular = true;
      for (int v = 0; v < sub.n(); ++v)
        if (sub.degree(v) != 2) { two_regular = false; break; }
      if (two_regular) continue;
    }
    return false;
  }
  return true;
}

namespace {

// All cliques (not only maximal) in size-then-lex order.
std::vector<std::vector<int>> all_cliques(const Graph& g) {
  std::vector<std::vector<int>> result;
  std::vector<std::vector<int>> frontier;
  for (int v = 0; v < g.n(); ++v) frontier.push_back({v});
  while (!frontier.empty()) {
    for (const auto& c : frontier) result.push_back(c);
    std::vector<std::vector<int>> next;
    for (const auto& c : frontier) {
      for (int w = c.back() + 1; w < g.n(); ++w) {
        bool ok = true;
        for (int v : c)
          if (!g.adjacent(v, w)) { ok = false; break; }
        if (ok) {
          auto ext = c;
          ext.push_back(w);
          next.push_back(std::move(ext));
        }
      }
    }
    frontier = std::move(next);
  }
  std::stable_sort(result.begin(), result.end(),
                   [](const std::vector<int>& a, const std::vector<int>& b) {
                     if (a.size() != b.size()) return a.size() < b.size();
                     return a < b;
                   });
  return result;
}

bool connected_without(const Graph& g, const std::vector<int>& removed) {
  std::vector<bool> blocked(g.n(), false);
  for (int v : removed) blocked[v] = true;
  int start = -1, remaining = 0;
  for (int v = 0; v < g.n(); ++v)
    if (!blocked[v]) { ++remaining; if (start < 0) start = v; }
  if (remaining <= 1) return true;
  std::queue<int> q;
  std::vector<bool> seen(g.n(), false);
  q.push(start);
  seen[start] = true;
  int count = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : g.neighbors(v))
      if (!blocked[w] && !seen[w]) { seen[w] = true; q.push(w); ++count; }
  }
  return count == remaining;
}

void atom_rec(const Graph& whole, std::vector<int> vertex_ids,
              std::vector<std::vector<int>>& atoms) {
  Graph sub = induced_subgraph(whole, vertex_ids);
  for (const auto& clique_local : all_cliques(sub)) {
    if ((int)clique_local.size() >= sub.n() - 1) continue;
    if (connected_without(sub, clique_local)) continue;
    // Found the smallest (then lex-first) separating clique.
    std::vector<bool> blocked(sub.n(), false);
    for (int v : clique_local) blocked[v] = true;
    std::vector<int> comp_of(sub.n(), -1);
    int comps = 0;
    for (int s = 0; s < sub.n(); ++s) {
      if (blocked[s] || comp_of[s] >= 0) continue;
      std::queue<int> q;
      q.push(s);
      comp_of[s] = comps;
      while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : sub.neighbors(v))
          if (!blocked[w] && comp_of[w] < 0) { comp_of[w] = comps; q.push(w); }
      }
      ++comps;
    }
    for (int c = 0; c < comps; ++c) {
      std::vector<int> part;
      for (int v = 0; v < sub.n(); ++v)
        if (comp_of[v] == c || blocked[v]) part.push_back(vertex_ids[v]);
      atom_rec(whole, std::move(part), atoms);
    }
    return;
  }
  std::sort(vertex_ids.begin(), vertex_ids.end());
  atoms.push_back(std::move(vertex_ids));
}

}  // namespace

std::vector<std::vector<int>> clique_separator_atoms(const Graph& g) {
  if (!is_connected(g)) throw std::invalid_argument("clique_separator_atoms: disconnected input");
  std::vector<int> all(g.n());
  for (int i = 0; i < g.n(); ++i) all[i] = i;
  std::vector<std::vector<int>> atoms;
  atom_rec(g, all, atoms);
  std::sort(atoms.begin(), atoms.end());
  return atoms;
}

int subgraph_distance(const Graph& g, const std::vector<int>& a, const std::vector<int>& b) {
  if (a.empty() || b.empty()) throw std::invalid_argument("subgraph_distance: empty set");
  std::vector<int> dist(g.n(), -1);
  std::queue<int> q;
  for (int v : a) {
    if (v < 0 || v >= g.n()) throw std::invalid_argument("subgraph_distance: vertex out of range");
    if (dist[v] < 0) { dist[v] = 0; q.push(v); }
  }
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : g.neighbors(v))
      if (dist[w] < 0) { dist[w] = dist[v] + 1; q.push(w); }
  }
  int best = -1;
  for (int v : b) {
    if (v < 0 || v >= g.n()) throw std::invalid_argument("subgraph_distance: vertex out of range");
    if (dist[v] >= 0 && (best < 0 || dist[v] < best)) best = dist[v];
  }
  if (best < 0) throw std::invalid_argument("subgraph_distance: sets in different components");
  return best;
}

int k_n(const Graph& g, int n) {
  auto cycles = induced_odd_cycles(g, 2 * n + 1);
  if (cycles.empty())
    throw std::invalid_argument("k_n: no induced cycles of length " + std::to_string(2 * n + 1));
  int m = (int)cycles.size();
  std::vector<std::pair<int, int>> conflicts;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (subgraph_distance(g, cycles[i], cycles[j]) <= 1) conflicts.push_back({i, j});
  Graph conflict_graph(VariableSet::numbered(m, "c"), std::move(conflicts));
  return independence_number(conflict_graph);
}

Graph complement(const Graph& g) {
  std::vector<std::pair<int, int>> edges;
  for (int a = 0; a < g.n(); ++a)
    for (int b = a + 1; b < g.n(); ++b)
      if (!g.adjacent(a, b)) edges.push_back({a, b});
  return Graph(g.vertices(), std::move(edges));
}

Graph graph_join(const Graph& a, const Graph& b) {
  std::vector<std::string> names = a.vertices().names();
  for (const auto& nm : b.vertices().names()) names.push_back(nm);
  std::vector<std::pair<int, int>> edges = a.edges();
  int off = a.n();
  for (auto [x, y] : b.edges()) edges.push_back({x + off, y + off});
  for (int x = 0; x < a.n(); ++x)
    for (int y = 0; y < b.n(); ++y) edges.push_back({x, y + off});
  return Graph(VariableSet(std::move(names)), std::move(edges));
}

std::optional<std::vector<int>> complete_multipartite_parts(const Graph& g) {
  // Complete multipartite iff the complement is a disjoint union of cliques.
  Graph comp = complement(g);
  std::vector<int> parts;
  for (const auto& cc : connected_components(comp)) {
    Graph sub = induced_subgraph(comp, cc);
    size_t want = cc.size() * (cc.size() - 1) / 2;
    if (sub.edges().size() != want) return std::nullopt;
    parts.push_back((int)cc.size());
  }
  std::sort(parts.begin(), parts.end());
  return parts;
}

}  // namespace resurgence
