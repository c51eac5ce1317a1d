#include "resurgence/containment.hpp"

#include <algorithm>
#include <cassert>
#include <future>
#include <stdexcept>

#include "resurgence/classify.hpp"
#include "resurgence/errors.hpp"
#include "resurgence/graph_ideals.hpp"
#include "resurgence/graph_invariants.hpp"

namespace resurgence {

SymbolicSource::SymbolicSource(MonomialIdeal base, SymbolicEngine engine)
    : base_(std::move(base)), engine_(engine) {}

SymbolicSource SymbolicSource::for_cover_ideal(const Graph& g) {
  SymbolicSource src(cover_ideal(g));
  src.cover_graph_ = g;
  return src;
}

const MonomialIdeal& SymbolicSource::get(int s) {
  auto it = cache_.find(s);
  if (it != cache_.end()) return it->second;
  MonomialIdeal value = cover_graph_ ? cover_symbolic_fast(*cover_graph_, s)
                                     : symbolic_power(base_, s, engine_);
  return cache_.emplace(s, std::move(value)).first->second;
}

ContainmentResult check_containment(const MonomialIdeal& I, int s, int t, bool certify,
                                    const ContainmentOptions& opts) {
  if (s < 1 || t < 1) throw std::invalid_argument("check_containment requires s, t >= 1");
  ContainmentResult res;
  res.s = s;
  res.t = t;
  const MonomialIdeal* sym = nullptr;
  MonomialIdeal local;
  if (opts.source) {
    sym = &opts.source->get(s);
  } else {
    local = symbolic_power(I, s, opts.engine);
    sym = &local;
  }
  res.holds = true;
  if (certify) res.certificate.emplace();
  for (const Monomial& gen : sym->generators()) {
    try {
      MembershipResult m = member_of_power(I, gen, t, certify, opts.node_budget);
      if (!m.member) {
        res.holds = false;
        res.witness = gen;
        res.certificate.reset();
        return res;
      }
      if (certify) res.certificate->push_back({gen, std::move(m.certificate)});
    } catch (const ResourceGuardError&) {
      res.truncated = true;
      res.holds = false;
      res.certificate.reset();
      return res;
    }
  }
  return res;
}

namespace {

struct ColumnResult {
  int s = 0;
  int boundary = 0;  // largest t in box with containment (0 when none checked)
  std::vector<SweepCell> cells;
  std::vector<SweepFailure> failures;
  bool truncated = false;
};

ColumnResult sweep_column(const MonomialIdeal& I, const MonomialIdeal& sym, int s, int t_box,
                          long long node_budget) {
  ColumnResult col;
  col.s = s;
  auto evaluate = [&](int t) -> std::pair<bool, std::optional<Monomial>> {
    for (const Monomial& gen : sym.generators()) {
      MembershipResult m = member_of_power(I, gen, t, false, node_budget);
      if (!m.member) return {false, gen};
    }
    return {true, std::nullopt};
  };
  try {
    // holds(t) is monotone decreasing in t (I^{t+1} ⊆ I^t); binary search
    // the boundary, then every larger t in the box fails.
    int lo = 0, hi = t_box;  // invariant: holds at lo (t=0 trivially), fails above hi+1
    std::optional<Monomial> first_witness;
    auto top = evaluate(t_box);
    if (top.first) {
      col.boundary = t_box;
    } else {
      first_witness = top.second;
      while (hi - lo > 1) {
        int mid = (lo + hi) / 2;
        auto r = evaluate(mid);
        if (r.first) {
          lo = mid;
        } else {
          hi = mid;
          first_witness = r.second;
        }
      }
      // Monotone shape assertion at the boundary.
      if (lo >= 1) assert(evaluate(lo).first);
      col.boundary = lo;
      // The witness found at the boundary fails every larger t as well,
      // since I^t shrinks as t grows.
      for (int t = hi; t <= t_box; ++t)
        col.failures.push_back({s, t, *first_witness});
    }
    for (int t = 1; t <= t_box; ++t) col.cells.push_back({s, t, t <= col.boundary});
  } catch (const ResourceGuardError&) {
    col.truncated = true;
  }
  return col;
}

}  // namespace

SweepResult sweep(const MonomialIdeal& I, int s_max, int t_max, const SweepOptions& opts) {
  SweepResult res;
  res.s_max = s_max;
  res.t_max = t_max;

  // Materialize the symbolic powers serially (the cache is shared), then
  // evaluate the membership columns, possibly in parallel: cells are pure.
  SymbolicSource local_source(I, opts.engine);
  SymbolicSource* src = opts.source ? opts.source : &local_source;
  std::vector<const MonomialIdeal*> sym(s_max + 1, nullptr);
  for (int s = 1; s <= s_max; ++s) sym[s] = &src->get(s);

  std::vector<ColumnResult> columns(s_max + 1);
  auto run_column = [&](int s) {
    return sweep_column(I, *sym[s], s, std::min(s, t_max), opts.node_budget);
  };
  if (opts.threads > 1) {
    std::vector<std::future<ColumnResult>> futures;
    for (int s = 1; s <= s_max; ++s)
      futures.push_back(std::async(std::launch::async, run_column, s));
    for (int s = 1; s <= s_max; ++s) columns[s] = futures[s - 1].get();
  } else {
    for (int s = 1; s <= s_max; ++s) columns[s] = run_column(s);
  }

  for (int s = 1; s <= s_max; ++s) {
    const ColumnResult& col = columns[s];
    res.truncated = res.truncated || col.truncated;
    res.cells.insert(res.cells.end(), col.cells.begin(), col.cells.end());
    res.failures.insert(res.failures.end(), col.failures.begin(), col.failures.end());
  }
  for (const SweepFailure& f : res.failures) {
    Rational ratio(f.s, f.t);
    if (ratio > Rational(1) && (!res.lower_bound || ratio > *res.lower_bound))
      res.lower_bound = ratio;
  }
  return res;
}

std::optional<int> least_noneq_power(const MonomialIdeal& I, int s_max) {
  for (int p = 1; p <= s_max; ++p)
    if (!(symbolic_power(I, p) == power(I, p))) return p;
  return std::nullopt;
}

GenGhmResult gen_ghm_bound(const MonomialIdeal& I, int n, const MonomialIdeal& P, int k,
                           int a_max) {
  if (n < 2) throw std::invalid_argument("gen_ghm_bound requires n >= 2");
  if (k < 1) throw std::invalid_argument("gen_ghm_bound requires k >= 1");
  GenGhmResult res;
  MonomialIdeal sym_n = symbolic_power(I, n);
  MonomialIdeal ord_n = power(I, n);

  MonomialIdeal lhs1 = product(P, sym_n);
  for (const Monomial& g : lhs1.generators()) {
    if (!contains_monomial(ord_n, g)) {
      res.failed_containment = "P*I^(n) is not inside I^n";
      res.witness = g;
      return res;
    }
  }
  MonomialIdeal rhs2 = product(power(P, k), power(I, n - 1));
  for (const Monomial& g : sym_n.generators()) {
    if (!contains_monomial(rhs2, g)) {
      res.failed_containment = "I^(n) is not inside P^k*I^(n-1)";
      res.witness = g;
      return res;
    }
  }
  res.containments_hold = true;
  res.bound = Rational((long long)n * k + n, (long long)n * k + n - 1);

  // The theorem needs the symbolic Rees algebra generated in degrees 1 and
  // n; that is not decidable here, but its consequence
  // I^(a) = (I^(n))^q I^r (a = nq + r, 0 <= r < n) is checked up to a_max.
  if (a_max < 0) a_max = 2 * n + 1;
  int verified = 0;
  for (int a = 1; a <= a_max; ++a) {
    int q = a / n, r = a % n;
    MonomialIdeal expect = MonomialIdeal::unit(I.ambient());
    if (q > 0) expect = power(sym_n, q);
    if (r > 0) expect = product(expect, power(I, r));
    if (!equals(symbolic_power(I, a), expect)) break;
    verified = a;
  }
  res.consequences_verified_to = verified;
  return res;
}

std::vector<ContainmentResult> cover_chi_containment_suite(const Graph& g, int c,
                                                           const std::vector<int>& r_values) {
  if (c < 1) throw std::invalid_argument("cover_chi_containment_suite requires c >= 1");
  int chi = chromatic_number(g);
  MonomialIdeal J = cover_ideal(g);
  SymbolicSource source = SymbolicSource::for_cover_ideal(g);
  ContainmentOptions opts;
  opts.source = &source;
  std::vector<ContainmentResult> out;
  for (int r : r_values) {
    int s1 = 2 * r - 2 * c;
    if (r >= c * chi && s1 >= 1) {
      out.push_back(check_containment(J, s1, r, false, opts));
    } else {
      ContainmentResult skip;
      skip.s = s1;
      skip.t = r;
      skip.out_of_hypothesis = true;
      out.push_back(skip);
    }
  }
  for (int r : r_values) {
    int s2 = 2 * r - 2 * c - 1;
    if (r >= c * chi + 1 && s2 >= 1) {
      out.push_back(check_containment(J, s2, r, false, opts));
    } else {
      ContainmentResult skip;
      skip.s = s2;
      skip.t = r;
      skip.out_of_hypothesis = true;
      out.push_back(skip);
    }
  }
  return out;
}

Rational hypergraph_rho_a_upper(const Hypergraph& h) {
  MonomialIdeal J = cover_ideal(h);
  int height = big_height(J);
  int chi = hypergraph_chromatic_number(h);
  return Rational(height) - Rational(1, chi);
}

std::vector<ContainmentResult> hypergraph_containment_suite(const Hypergraph& h,
                                                            const std::vector<int>& r_values) {
  MonomialIdeal J = cover_ideal(h);
  int height = big_height(J);
  int chi = hypergraph_chromatic_number(h);
  SymbolicSource source(J);
  ContainmentOptions opts;
  opts.source = &source;
  std::vector<ContainmentResult> out;
  for (int r : r_values) {
    int s = r * height - height;
    if (r >= chi && s >= 1) {
      out.push_back(check_containment(J, s, r, false, opts));
    } else {
      ContainmentResult skip;
      skip.s = s;
      skip.t = r;
      skip.out_of_hypothesis = true;
      out.push_back(skip);
    }
  }
  return out;
}

ContainmentResult tech3_containment_check(const Graph& g, int n, int b) {
  GraphClassification c = classify(g);
  if (!c.in_cliquesum_class || c.class_data->half_lengths.size() != 1 ||
      c.class_data->half_lengths.front() != n)
    throw std::invalid_argument(
        "tech3_containment_check: graph is not a clique-sum of bipartite graphs and "
        "(2n+1)-cycles");
  int k = c.class_data->k_by_half_length.at(n);
  if (b <= k)
    throw std::invalid_argument("tech3_containment_check: requires b > k_n(G)");
  int target = b * n + (b - k + 1) / 2;
  MonomialIdeal I = edge_ideal(g);
  MonomialIdeal jn_b = power(jn_ideal(g, n), b);
  ContainmentResult res;
  res.s = b;
  res.t = target;
  res.holds = true;
  for (const Monomial& gen : jn_b.generators()) {
    MembershipResult m = member_of_power(I, gen, target);
    if (!m.member) {
      res.holds = false;
      res.witness = gen;
      return res;
    }
  }
  return res;
}

RestrictionCheckReport restriction_monotonicity_check(const Graph& g, const std::vector<int>& a,
                                                      int s_max, int t_max) {
  Graph h = induced_subgraph(g, a);
  if (h.edges().empty())
    throw std::invalid_argument("restriction_monotonicity_check: subgraph has no edges");
  RestrictionCheckReport rep;

  std::vector<int> removed;
  {
    std::vector<bool> keep(g.n(), false);
    for (int v : a) keep[v] = true;
    for (int v = 0; v < g.n(); ++v)
      if (!keep[v]) removed.push_back(v);
  }
  auto lift = [&](const Monomial& w) {
    std::vector<int> e(g.n(), 0);
    for (int i = 0; i < h.n(); ++i) {
      int global = g.vertices().index_of(h.vertices().name(i));
      e[global] = w.exponent(i);
    }
    return Monomial(std::move(e));
  };

  // Edge ideals: failures transport verbatim (I(H)^(s) = I(G)^(s) ∩ R_H).
  {
    MonomialIdeal ig = edge_ideal(g);
    rep.edge_ok = true;
    SweepResult sub = sweep(edge_ideal(h), s_max, t_max);
    for (const SweepFailure& f : sub.failures) {
      Monomial w = lift(f.witness);
      bool in_symbolic = symbolic_member(make_symbolic_spec(ig, f.s), w);
      bool in_power = member_of_power(ig, w, f.t).member;
      if (in_symbolic && !in_power)
        ++rep.edge_failures_lifted;
      else
        rep.edge_ok = false;
    }
  }
  // Cover ideals: J(H) = J(G) : x_U, and w * x_U^s transports the failure.
  {
    MonomialIdeal jg = cover_ideal(g);
    rep.cover_ok = true;
    SweepOptions sweep_opts;
    SymbolicSource src = SymbolicSource::for_cover_ideal(h);
    sweep_opts.source = &src;
    SweepResult sub = sweep(cover_ideal(h), s_max, t_max, sweep_opts);
    for (const SweepFailure& f : sub.failures) {
      std::vector<int> e(g.n(), 0);
      for (int v : removed) e[v] = f.s;
      Monomial w = lift(f.witness) * Monomial(std::move(e));
      bool in_symbolic = symbolic_member(make_symbolic_spec(jg, f.s), w);
      bool in_power = member_of_power(jg, w, f.t).member;
      if (in_symbolic && !in_power)
        ++rep.cover_failures_lifted;
      else
        rep.cover_ok = false;
    }
  }
  return rep;
}

namespace {

JoinCheckReport finish_join_report(const Graph& g, bool condition) {
  JoinCheckReport rep;
  int chi = chromatic_number(g);
  int omega = clique_number(g);
  if (chi != omega)
    throw std::logic_error("join construction unexpectedly has chi != omega");
  rep.rho = Rational(2) - Rational(2, omega);
  MonomialIdeal J = cover_ideal(g);
  WaldschmidtEstimate wd = waldschmidt(J, WaldschmidtMode::CoverIdeal);
  rep.alpha_ratio = Rational(alpha(J)) / *wd.exact;
  rep.condition = condition;
  rep.equality = (rep.alpha_ratio == rep.rho);
  rep.iff_holds = (rep.condition == rep.equality);
  return rep;
}

}  // namespace

JoinCheckReport join_characterization_check(int m, const Graph& h) {
  if (m < 1) throw std::invalid_argument("join check: m >= 1 required");
  BipartiteResult bip = is_bipartite(h);
  if (!bip.bipartite || h.edges().empty())
    throw std::invalid_argument("join check: H must be a non-trivial bipartite graph");
  Graph km_c(VariableSet::numbered(m, "u"), {});
  Graph g = graph_join(km_c, h);
  int alpha_jh = alpha(cover_ideal(h));
  bool condition = (2 * m == h.n()) && (2 * alpha_jh == h.n());
  return finish_join_report(g, condition);
}

JoinCheckReport join_characterization_check(const std::vector<int>& part_sizes) {
  if (part_sizes.size() < 2)
    throw std::invalid_argument("join check: at least two parts required");
  int total = 0;
  for (int p : part_sizes) {
    if (p < 1) throw std::invalid_argument("join check: part sizes must be positive");
    total += p;
  }
  std::vector<std::pair<int, int>> edges;
  std::vector<int> part_of;
  for (size_t i = 0; i < part_sizes.size(); ++i)
    for (int j = 0; j < part_sizes[i]; ++j) part_of.push_back((int)i);
  for (int u = 0; u < total; ++u)
    for (int v = u + 1; v < total; ++v)
      if (part_of[u] != part_of[v]) edges.push_back({u, v});
  Graph g(VariableSet::numbered(total), std::move(edges));
  bool condition = std::all_of(part_sizes.begin(), part_sizes.end(),
                               [&](int p) { return p == part_sizes.front(); });
  return finish_join_report(g, condition);
}

}  // namespace resurgence
