#include "resurgence/resurgence.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "resurgence/classify.hpp"
#include "resurgence/graph_ideals.hpp"
#include "resurgence/graph_invariants.hpp"

namespace resurgence {

Rational cover_upper_chi(const Graph& g) {
  if (!is_connected(g)) throw std::invalid_argument("cover_upper_chi: disconnected input");
  if (g.has_isolated_vertex())
    throw std::invalid_argument("cover_upper_chi: isolated vertex present");
  return Rational(2) - Rational(2, chromatic_number(g));
}

Rational rho_alpha_lower(const MonomialIdeal& I, WaldschmidtMode mode) {
  WaldschmidtEstimate est = waldschmidt(I, mode);
  Rational hat = est.exact ? *est.exact : est.upper;
  return Rational(alpha(I)) / hat;
}

namespace {

void tag(ResurgenceReport& rep, const std::string& quantity, const std::string& bound,
         Rational value, const std::string& theorem, const std::string& inputs = "") {
  rep.provenance.push_back({quantity, bound, value, theorem, inputs});
}

void set_exact_both(ResurgenceReport& rep, Rational v, const std::string& theorem,
                    const std::string& inputs = "") {
  rep.rho = ValueOrInterval::exactly(v);
  rep.rho_a = ValueOrInterval::exactly(v);
  tag(rep, "rho", "exact", v, theorem, inputs);
  tag(rep, "rho_a", "exact", v, theorem, inputs);
}

ValueOrInterval max_combine(const std::vector<ValueOrInterval>& vals) {
  Rational lo(1), hi(1);
  bool all_exact = true;
  for (const auto& v : vals) {
    lo = max(lo, v.lower);
    hi = max(hi, v.upper);
    all_exact = all_exact && v.is_exact();
  }
  if (all_exact || lo == hi) return ValueOrInterval::exactly(hi);
  // An exact part attaining the largest upper bound decides the max.
  for (const auto& v : vals)
    if (v.is_exact() && *v.exact == hi) return ValueOrInterval::exactly(hi);
  return ValueOrInterval::between(lo, hi);
}

// Largest s with (s+1)^nvars within the enumeration budget.
int feasible_sweep_s(int nvars, int wanted, long long budget = 2'000'000) {
  int s = 0;
  while (s < wanted) {
    double cost = std::pow((double)(s + 2), (double)nvars);
    if (cost > (double)budget) break;
    ++s;
  }
  return s;
}

// Verified witness for a sweep-failure entry; throws on verification failure
// (a bad witness is a build-stopping bug, never reportable output).
SweepFailure verified_failure(const MonomialIdeal& I, const Monomial& w, int s, int t,
                              long long node_budget) {
  if (!symbolic_member(make_symbolic_spec(I, s), w))
    throw std::logic_error("witness fails symbolic membership re-check");
  if (member_of_power(I, w, t, false, node_budget).member)
    throw std::logic_error("witness unexpectedly lies in the ordinary power");
  return SweepFailure{s, t, w};
}

Monomial all_vertices_monomial(const Graph& g) {
  return Monomial(std::vector<int>(g.n(), 1));
}

ResurgenceReport cover_report_connected(const Graph& g, const EngineOptions& opts);

ResurgenceReport cover_report(const Graph& g, const EngineOptions& opts) {
  if (g.has_isolated_vertex())
    throw std::invalid_argument("exact_cover_resurgence: isolated vertex present");
  if (is_connected(g)) return cover_report_connected(g, opts);
  ResurgenceReport rep;
  rep.ideal = "J(G)";
  std::vector<ValueOrInterval> rhos, rho_as;
  for (const auto& comp : connected_components(g)) {
    ResurgenceReport sub = cover_report(induced_subgraph(g, comp), opts);
    rhos.push_back(sub.rho);
    rho_as.push_back(sub.rho_a);
    for (auto& p : sub.provenance) rep.provenance.push_back(p);
    rep.truncated = rep.truncated || sub.truncated;
  }
  rep.rho = max_combine(rhos);
  rep.rho_a = max_combine(rho_as);
  tag(rep, "rho", rep.rho.is_exact() ? "exact" : "upper", rep.rho.upper,
      "disconnected component rule");
  return rep;
}

ResurgenceReport cover_report_connected(const Graph& g, const EngineOptions& opts) {
  ResurgenceReport rep;
  rep.ideal = "J(G)";
  GraphClassification c = classify(g);

  if (c.kind == GraphKind::Bipartite) {
    set_exact_both(rep, Rational(1), "bipartite theorem");
    return rep;
  }
  if (c.odd_cycle_length) {
    int len = *c.odd_cycle_length;
    int n = (len - 1) / 2;
    set_exact_both(rep, Rational(2 * n + 2, 2 * n + 1), "odd-cycle theorem",
                   "cycle length " + std::to_string(len));
    MonomialIdeal J = cover_ideal(g);
    rep.witnesses.push_back(
        verified_failure(J, all_vertices_monomial(g), 2, 2, opts.node_budget));
  } else if (c.multipartite_parts) {
    int k = (int)c.multipartite_parts->size();
    set_exact_both(rep, Rational(2) - Rational(2, k), "complete multipartite",
                   std::to_string(k) + " parts");
  } else if (c.chi_equals_omega) {
    set_exact_both(rep, Rational(2) - Rational(2, c.omega), "chi-equals-omega corollary",
                   "chi = omega = " + std::to_string(c.omega));
  } else if (c.atoms.size() >= 2) {
    std::vector<ValueOrInterval> rhos, rho_as;
    for (const auto& atom : c.atoms) {
      ResurgenceReport sub = cover_report(induced_subgraph(g, atom), opts);
      rhos.push_back(sub.rho);
      rho_as.push_back(sub.rho_a);
      rep.truncated = rep.truncated || sub.truncated;
    }
    rep.rho = max_combine(rhos);
    rep.rho_a = max_combine(rho_as);
    tag(rep, "rho", rep.rho.is_exact() ? "exact" : "upper", rep.rho.upper,
        "clique-sum max rule", std::to_string(c.atoms.size()) + " atoms");
    if (rep.rho_a.is_exact())
      tag(rep, "rho_a", "exact", *rep.rho_a.exact, "clique-sum max rule");
  } else if (c.cactus) {
    int len = *c.smallest_odd_cycle_length;
    set_exact_both(rep, Rational(len + 1, len), "cactus theorem",
                   "smallest odd cycle " + std::to_string(len));
  } else {
    // Interval fallback: best theorem bounds plus a sweep lower bound.
    MonomialIdeal J = cover_ideal(g);
    Rational upper = cover_upper_chi(g);
    Rational lower_ratio = rho_alpha_lower(J, WaldschmidtMode::CoverIdeal);
    Rational lower_omega = Rational(2) - Rational(2, c.omega);
    Rational lower_alpha = Rational(2) - Rational(2LL * independence_number(g), g.n());
    Rational lo = max(lower_ratio, max(lower_omega, lower_alpha));
    tag(rep, "rho", "upper", upper, "chi upper bound", "chi = " + std::to_string(c.chi));
    tag(rep, "rho_a", "upper", upper, "chi upper bound");
    tag(rep, "rho", "lower", lower_ratio, "alpha ratio lower bound");
    tag(rep, "rho", "lower", lower_omega, "omega lower bound",
        "omega = " + std::to_string(c.omega));
    tag(rep, "rho", "lower", lower_alpha, "independence lower bound");
    rep.rho_a = ValueOrInterval::between(lo, upper);

    SweepOptions sopts;
    sopts.node_budget = opts.node_budget;
    sopts.threads = opts.threads;
    SymbolicSource source = SymbolicSource::for_cover_ideal(g);
    sopts.source = &source;
    SweepResult sw = sweep(J, opts.sweep_s_max, opts.sweep_t_max, sopts);
    rep.truncated = rep.truncated || sw.truncated;
    rep.containments = sw.cells;
    for (const auto& f : sw.failures) rep.witnesses.push_back(f);
    if (sw.lower_bound) {
      tag(rep, "rho", "lower", *sw.lower_bound, "sweep lower bound");
      lo = max(lo, *sw.lower_bound);
    }
    rep.rho = (lo == upper) ? ValueOrInterval::exactly(lo)
                            : ValueOrInterval::between(lo, upper);
    return rep;
  }

  // Corroborating provenance from other matching classes; exact routes must
  // agree, a mismatch is a bug in the engine, not a reportable result.
  if (opts.corroborate && rep.rho.is_exact()) {
    if (c.cactus && c.smallest_odd_cycle_length &&
        rep.provenance.front().tag != "cactus theorem") {
      Rational v(*c.smallest_odd_cycle_length + 1, *c.smallest_odd_cycle_length);
      if (v != *rep.rho.exact) throw std::logic_error("cactus corroboration disagrees");
      tag(rep, "rho", "exact", v, "cactus theorem",
          "smallest odd cycle " + std::to_string(*c.smallest_odd_cycle_length));
    }
    if (c.atoms.size() >= 2 && rep.provenance.front().tag != "clique-sum max rule") {
      EngineOptions sub_opts = opts;
      sub_opts.corroborate = false;
      std::vector<ValueOrInterval> rhos;
      for (const auto& atom : c.atoms)
        rhos.push_back(cover_report(induced_subgraph(g, atom), sub_opts).rho);
      ValueOrInterval via_atoms = max_combine(rhos);
      if (via_atoms.is_exact()) {
        if (*via_atoms.exact != *rep.rho.exact)
          throw std::logic_error("clique-sum corroboration disagrees");
        tag(rep, "rho", "exact", *via_atoms.exact, "clique-sum max rule",
            std::to_string(c.atoms.size()) + " atoms");
      }
    }
  }
  return rep;
}

}  // namespace

ResurgenceReport exact_cover_resurgence(const Graph& g, const EngineOptions& opts) {
  return cover_report(g, opts);
}

namespace {

ResurgenceReport edge_report_connected(const Graph& g, const EngineOptions& opts) {
  ResurgenceReport rep;
  rep.ideal = "I(G)";
  GraphClassification c = classify(g);

  if (c.kind == GraphKind::Bipartite) {
    set_exact_both(rep, Rational(1), "edge bipartite theorem");
    return rep;
  }

  MonomialIdeal I = edge_ideal(g);
  int smallest = *c.smallest_odd_cycle_length;
  int n1 = (smallest - 1) / 2;
  Rational rho_a_cycle(2 * n1 + 2, 2 * n1 + 1);

  if (c.in_cliquesum_class) {
    rep.rho_a = ValueOrInterval::exactly(rho_a_cycle);
    tag(rep, "rho_a", "exact", rho_a_cycle, "edge class asymptotic resurgence",
        "n_1 = " + std::to_string(n1));
    const auto& data = *c.class_data;
    if (data.half_lengths.size() == 1) {
      int k = data.k_by_half_length.at(n1);
      Rational value = (k == 1) ? Rational(2 * n1 + 2, 2 * n1 + 1)
                                : Rational((long long)k * n1 + k, (long long)k * n1 + 1);
      rep.rho = ValueOrInterval::exactly(value);
      tag(rep, "rho", "exact", value, "edge class resurgence",
          "n = " + std::to_string(n1) + ", k = " + std::to_string(k));
      // The witness u_{C_1}...u_{C_k} over a maximum distance-separated
      // family lies in I^(kn+k) but not I^{kn+1}.
      auto cycles = induced_odd_cycles(g, smallest);
      int m = (int)cycles.size();
      std::vector<std::pair<int, int>> conflicts;
      for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
          if (subgraph_distance(g, cycles[i], cycles[j]) <= 1) conflicts.push_back({i, j});
      Graph conflict_graph(VariableSet::numbered(m, "c"), std::move(conflicts));
      std::vector<int> family = maximum_independent_set(conflict_graph);
      std::vector<int> e(g.n(), 0);
      for (int idx : family)
        for (int v : cycles[idx]) e[v] += 1;
      rep.witnesses.push_back(verified_failure(I, Monomial(std::move(e)), k * n1 + k,
                                               k * n1 + 1, opts.node_budget));
    } else {
      Rational lo = rho_a_cycle;
      int s_box = feasible_sweep_s(g.n(), opts.sweep_s_max);
      if (s_box >= 1) {
        SweepOptions sopts;
        sopts.node_budget = opts.node_budget;
        sopts.threads = opts.threads;
        SweepResult sw = sweep(I, s_box, std::min(s_box, opts.sweep_t_max), sopts);
        rep.truncated = rep.truncated || sw.truncated;
        rep.containments = sw.cells;
        for (const auto& f : sw.failures) rep.witnesses.push_back(f);
        if (sw.lower_bound) {
          tag(rep, "rho", "lower", *sw.lower_bound, "sweep lower bound");
          lo = max(lo, *sw.lower_bound);
        }
      }
      rep.rho = ValueOrInterval::between(lo, Rational(2));
      tag(rep, "rho", "lower", rho_a_cycle, "asymptotic resurgence lower bound");
      tag(rep, "rho", "upper", Rational(2), "literature upper bound");
      rep.flags.push_back("several odd cycle lengths: exact resurgence not covered by a theorem");
    }
    return rep;
  }

  // Outside the clique-sum class: odd-cycle restriction gives the rho_a
  // lower bound, the hypergraph bound the rho_a upper bound.
  Rational rho_a_upper = min(Rational(2), hypergraph_rho_a_upper(hypergraph_of_ideal(I)));
  rep.rho_a = ValueOrInterval::between(rho_a_cycle, rho_a_upper);
  tag(rep, "rho_a", "lower", rho_a_cycle, "induced odd cycle restriction",
      "smallest odd cycle " + std::to_string(smallest));
  tag(rep, "rho_a", "upper", rho_a_upper, "hypergraph chromatic upper bound");

  Rational lo = rho_a_cycle;
  int s_box = feasible_sweep_s(g.n(), opts.sweep_s_max);
  if (s_box >= 1) {
    SweepOptions sopts;
    sopts.node_budget = opts.node_budget;
    sopts.threads = opts.threads;
    SweepResult sw = sweep(I, s_box, std::min(s_box, opts.sweep_t_max), sopts);
    rep.truncated = rep.truncated || sw.truncated;
    rep.containments = sw.cells;
    for (const auto& f : sw.failures) rep.witnesses.push_back(f);
    if (sw.lower_bound) {
      tag(rep, "rho", "lower", *sw.lower_bound, "sweep lower bound");
      lo = max(lo, *sw.lower_bound);
    }
  }
  rep.rho = ValueOrInterval::between(lo, Rational(2));
  tag(rep, "rho", "upper", Rational(2), "literature upper bound");
  return rep;
}

}  // namespace

ResurgenceReport exact_edge_resurgence(const Graph& g, const EngineOptions& opts) {
  if (g.has_isolated_vertex())
    throw std::invalid_argument("exact_edge_resurgence: isolated vertex present");
  if (is_connected(g)) return edge_report_connected(g, opts);

  // Components with symbolic = ordinary (bipartite, by the classical
  // equivalence) drop out of the sum without changing the resurgence.
  std::vector<std::vector<int>> comps = connected_components(g);
  std::vector<ResurgenceReport> parts;
  ResurgenceReport rep;
  rep.ideal = "I(G)";
  for (const auto& comp : comps) {
    Graph sub = induced_subgraph(g, comp);
    if (is_bipartite(sub).bipartite) {
      rep.flags.push_back("bipartite component dropped (symbolic powers equal ordinary powers)");
      continue;
    }
    parts.push_back(edge_report_connected(sub, opts));
  }
  if (parts.empty()) {
    set_exact_both(rep, Rational(1), "edge bipartite theorem", "all components bipartite");
    return rep;
  }
  if (parts.size() == 1) {
    parts[0].flags.insert(parts[0].flags.end(), rep.flags.begin(), rep.flags.end());
    tag(parts[0], "rho", parts[0].rho.is_exact() ? "exact" : "upper", parts[0].rho.upper,
        "sum reduction to the non-bipartite component");
    return parts[0];
  }
  std::vector<ValueOrInterval> rhos, rho_as;
  Rational upper_sum(0);
  for (auto& p : parts) {
    rhos.push_back(p.rho);
    rho_as.push_back(p.rho_a);
    upper_sum = upper_sum + p.rho.upper;
    for (auto& pr : p.provenance) rep.provenance.push_back(pr);
    rep.truncated = rep.truncated || p.truncated;
  }
  ValueOrInterval lo_combined = max_combine(rhos);
  rep.rho = ValueOrInterval::between(lo_combined.lower, min(Rational(2), upper_sum));
  rep.rho_a = ValueOrInterval::between(max_combine(rho_as).lower, Rational(2));
  tag(rep, "rho", "lower", lo_combined.lower, "component maximum");
  tag(rep, "rho", "upper", rep.rho.upper, "literature upper bound");
  rep.flags.push_back("several non-bipartite components: no exact sum theorem applies");
  return rep;
}

ResurgenceReport disjoint_product_rho(const std::vector<ResurgenceReport>& parts) {
  if (parts.empty()) throw std::invalid_argument("disjoint_product_rho: no parts");
  ResurgenceReport rep;
  rep.ideal = "product";
  std::vector<ValueOrInterval> rhos, rho_as;
  for (const auto& p : parts) {
    rhos.push_back(p.rho);
    rho_as.push_back(p.rho_a);
    rep.truncated = rep.truncated || p.truncated;
  }
  rep.rho = max_combine(rhos);
  rep.rho_a = max_combine(rho_as);
  tag(rep, "rho", rep.rho.is_exact() ? "exact" : "upper", rep.rho.upper,
      "disjoint product max rule", std::to_string(parts.size()) + " factors");
  if (rep.rho_a.is_exact())
    tag(rep, "rho_a", "exact", *rep.rho_a.exact, "disjoint product max rule");
  return rep;
}

SumRhoResult disjoint_sum_rho(const std::vector<SumPart>& parts, int p_search_bound) {
  if (parts.size() < 2) throw std::invalid_argument("disjoint_sum_rho: need at least two parts");
  SumRhoResult out;
  ResurgenceReport& rep = out.report;
  rep.ideal = "sum";

  // Joint ambient: variable names must be pairwise disjoint.
  std::vector<std::string> names;
  for (const auto& part : parts)
    for (const auto& nm : part.ideal.ambient().names()) names.push_back(nm);
  VariableSet joint(names);

  struct Kept {
    int p;
    MonomialIdeal embedded;
    Monomial witness;  // generator of I^(p) outside I^p, in the joint ring
    std::optional<Rational> rho_exact;
  };
  std::vector<Kept> kept;
  MonomialIdeal total = MonomialIdeal::zero(joint);
  for (const auto& part : parts) {
    MonomialIdeal emb = extend_to(part.ideal, joint);
    total = sum(total, emb);
    std::optional<int> p = least_noneq_power(part.ideal, p_search_bound);
    out.p_values.push_back(p);
    if (!p) {
      rep.flags.push_back("part " + part.label + ": symbolic = ordinary up to bound " +
                          std::to_string(p_search_bound) + " (bound-dependent drop)");
      continue;
    }
    MonomialIdeal symp = symbolic_power(part.ideal, *p);
    MonomialIdeal ordp = power(part.ideal, *p);
    Monomial w;
    bool found = false;
    for (const Monomial& gen : symp.generators())
      if (!contains_monomial(ordp, gen) && !member_of_power(part.ideal, gen, *p).member) {
        w = gen;
        found = true;
        break;
      }
    if (!found) throw std::logic_error("least_noneq_power found p but no witness generator");
    std::vector<int> e(joint.count(), 0);
    for (int i = 0; i < part.ideal.ambient().count(); ++i)
      e[joint.index_of(part.ideal.ambient().name(i))] = w.exponent(i);
    kept.push_back({*p, std::move(emb), Monomial(std::move(e)), part.rho_exact});
  }

  bool all_unit = true;
  for (const auto& part : parts)
    if (!part.rho_exact || *part.rho_exact != Rational(1)) all_unit = false;

  if (kept.empty()) {
    if (all_unit) {
      set_exact_both(rep, Rational(1), "sum of parts with symbolic = ordinary");
    } else {
      rep.rho = ValueOrInterval::between(Rational(1), Rational(2));
      rep.flags.push_back("no part has a non-equal power within the bound; formula vacuous");
    }
    return out;
  }

  std::sort(kept.begin(), kept.end(), [](const Kept& a, const Kept& b) { return a.p < b.p; });

  // max over 2 <= r <= m of (p_1+...+p_r)/(p_1+...+p_r-r+1), p ascending.
  Rational best(0);
  int best_r = 0;
  long long prefix = 0;
  for (int r = 1; r <= (int)kept.size(); ++r) {
    prefix += kept[r - 1].p;
    if (r < 2) continue;
    Rational candidate(prefix, prefix - r + 1);
    if (candidate > best) {
      best = candidate;
      best_r = r;
    }
  }
  if (best_r >= 2) {
    out.formula_value = best;
    std::string ps;
    for (const auto& k : kept) ps += (ps.empty() ? "p = " : ", ") + std::to_string(k.p);
    tag(rep, "rho", all_unit ? "exact" : "lower", best, "sum formula", ps);

    // tech-res witness: the product of the first best_r component witnesses
    // fails at (sum p_i, sum p_i - r + 1).
    long long s = 0;
    Monomial w = Monomial::unit(joint.count());
    for (int i = 0; i < best_r; ++i) {
      s += kept[i].p;
      w = w * kept[i].witness;
    }
    int t = (int)(s - best_r + 1);
    out.witness = verified_failure(total, w, (int)s, t, kDefaultNodeBudget);
    rep.witnesses.push_back(*out.witness);
  }

  if (all_unit) {
    rep.rho = ValueOrInterval::exactly(best);
    rep.rho_a = ValueOrInterval::between(Rational(1), best);
  } else {
    Rational lo = best;
    Rational upper_sum(0);
    bool have_uppers = true;
    for (const auto& part : parts) {
      if (part.rho_exact) {
        lo = max(lo, *part.rho_exact);
        upper_sum = upper_sum + *part.rho_exact;
      } else {
        have_uppers = false;
      }
    }
    Rational hi = have_uppers ? upper_sum : Rational(2 * (long long)parts.size());
    rep.rho = ValueOrInterval::between(lo, hi);
    tag(rep, "rho", "upper", hi, "sum of part resurgences");
    rep.flags.push_back(
        "parts do not all have resurgence one: the sum formula value is a certified lower "
        "bound, not an exact value");
  }
  return out;
}

}  // namespace resurgence
