#include "resurgence/symbolic.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "resurgence/classify.hpp"
#include "resurgence/graph_ideals.hpp"
#include "resurgence/graph_invariants.hpp"

namespace resurgence {

SymbolicPowerSpec make_symbolic_spec(const MonomialIdeal& I, int s) {
  if (!is_squarefree(I)) throw std::invalid_argument("symbolic powers need a squarefree base");
  if (s < 1) throw std::invalid_argument("symbolic power requires s >= 1");
  return SymbolicPowerSpec{I, minimal_primes(I), s};
}

bool symbolic_member(const SymbolicPowerSpec& spec, const Monomial& m) {
  if (m.nvars() != spec.base.ambient().count())
    throw std::invalid_argument("monomial length mismatch with ambient");
  for (const auto& prime : spec.primes) {
    int total = 0;
    for (int v : prime) total += m.exponent(v);
    if (total < spec.s) return false;
  }
  return true;
}

namespace {

// Enumeration engine.  Every minimal generator of I^(s) has all exponents
// <= s: lowering an exponent above s keeps every prime sum it participates
// in at >= s, so such a point is never minimal.  A feasible point is minimal
// exactly when each positive coordinate lies in some prime whose sum is
// tight (= s), i.e. no unit decrement stays feasible.
MonomialIdeal symbolic_enumeration(const MonomialIdeal& I, int s) {
  const int n = I.ambient().count();
  auto primes = minimal_primes(I);
  const int np = (int)primes.size();

  std::vector<std::vector<int>> primes_of_var(n);
  for (int p = 0; p < np; ++p)
    for (int v : primes[p]) primes_of_var[v].push_back(p);

  // Remaining capacity per prime if every later variable maxes out at s.
  std::vector<std::vector<int>> vars_left(np, std::vector<int>(n + 1, 0));
  for (int p = 0; p < np; ++p)
    for (int i = n - 1; i >= 0; --i) {
      bool in = std::binary_search(primes[p].begin(), primes[p].end(), i);
      vars_left[p][i] = vars_left[p][i + 1] + (in ? 1 : 0);
    }

  std::vector<int> exps(n, 0), sums(np, 0);
  std::vector<Monomial> gens;
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      for (int v = 0; v < n; ++v) {
        if (exps[v] == 0) continue;
        bool tight = false;
        for (int p : primes_of_var[v])
          if (sums[p] == s) { tight = true; break; }
        if (!tight) return;
      }
      gens.push_back(Monomial(exps));
      return;
    }
    int hi = primes_of_var[i].empty() ? 0 : s;
    for (int e = 0; e <= hi; ++e) {
      exps[i] = e;
      for (int p : primes_of_var[i]) sums[p] += e;
      bool feasible = true;
      for (int p = 0; p < np; ++p)
        if (sums[p] + s * vars_left[p][i + 1] < s) { feasible = false; break; }
      if (feasible) rec(i + 1);
      for (int p : primes_of_var[i]) sums[p] -= e;
    }
    exps[i] = 0;
  };
  rec(0);
  return minimalize(I.ambient(), std::move(gens));
}

MonomialIdeal prime_power_ideal(const VariableSet& ambient, const std::vector<int>& prime,
                                int s) {
  // All monomials of degree s supported on the prime's variables.
  std::vector<Monomial> gens;
  std::vector<int> exps(ambient.count(), 0);
  std::function<void(size_t, int)> rec = [&](size_t idx, int remaining) {
    if (idx + 1 == prime.size()) {
      exps[prime[idx]] = remaining;
      gens.push_back(Monomial(exps));
      exps[prime[idx]] = 0;
      return;
    }
    for (int e = 0; e <= remaining; ++e) {
      exps[prime[idx]] = e;
      rec(idx + 1, remaining - e);
    }
    exps[prime[idx]] = 0;
  };
  rec(0, s);
  return minimalize(ambient, std::move(gens));
}

MonomialIdeal symbolic_intersection(const MonomialIdeal& I, int s) {
  auto primes = minimal_primes(I);
  MonomialIdeal acc = prime_power_ideal(I.ambient(), primes.front(), s);
  for (size_t i = 1; i < primes.size(); ++i)
    acc = intersect(acc, prime_power_ideal(I.ambient(), primes[i], s));
  return acc;
}

}  // namespace

MonomialIdeal symbolic_power(const MonomialIdeal& I, int s, SymbolicEngine engine) {
  if (!is_squarefree(I)) throw std::invalid_argument("symbolic_power: base is not squarefree");
  if (I.is_zero() || I.is_unit())
    throw std::invalid_argument("symbolic_power: ideal must be proper and nonzero");
  if (s < 1) throw std::invalid_argument("symbolic_power requires s >= 1");
  switch (engine) {
    case SymbolicEngine::Enumeration:
      return symbolic_enumeration(I, s);
    case SymbolicEngine::PrimeIntersection:
      return symbolic_intersection(I, s);
    case SymbolicEngine::CrossCheck: {
      MonomialIdeal a = symbolic_enumeration(I, s);
      MonomialIdeal b = symbolic_intersection(I, s);
      if (!(a == b)) throw std::logic_error("symbolic engines disagree");
      return a;
    }
  }
  throw std::logic_error("unreachable");
}

MonomialIdeal cover_symbolic_fast(const Graph& g, int s) {
  MonomialIdeal J = cover_ideal(g);
  if (s == 1) return J;
  MonomialIdeal J2 = symbolic_power(J, 2);
  MonomialIdeal acc = (s / 2 >= 1) ? power(J2, s / 2) : MonomialIdeal::unit(J.ambient());
  if (s % 2 == 1) acc = product(J, acc);
  return acc;
}

MonomialIdeal jn_ideal(const Graph& g, int n) {
  std::vector<Monomial> gens;
  for (const auto& cycle : induced_odd_cycles(g, 2 * n + 1)) {
    std::vector<int> e(g.n(), 0);
    for (int v : cycle) e[v] = 1;
    gens.push_back(Monomial(std::move(e)));
  }
  return MonomialIdeal::make(g.vertices(), std::move(gens));
}

MonomialIdeal edge_symbolic_decomposition(const Graph& g, int s) {
  GraphClassification c = classify(g);
  if (!c.in_cliquesum_class)
    throw std::invalid_argument(
        "edge_symbolic_decomposition: graph is not a clique-sum of bipartite graphs and odd "
        "cycles");
  MonomialIdeal I = edge_ideal(g);
  if (s == 1) return I;
  const auto& ns = c.class_data->half_lengths;
  std::vector<MonomialIdeal> jn;
  for (int n : ns) jn.push_back(jn_ideal(g, n));

  MonomialIdeal total = MonomialIdeal::zero(I.ambient());
  std::vector<int> a(ns.size(), 0);
  std::function<void(size_t, int)> rec = [&](size_t idx, int remaining) {
    if (idx == ns.size()) {
      int t = remaining;
      MonomialIdeal term = MonomialIdeal::unit(I.ambient());
      if (t > 0) term = power(I, t);
      for (size_t i = 0; i < ns.size(); ++i)
        if (a[i] > 0) term = product(term, power(jn[i], a[i]));
      total = sum(total, term);
      return;
    }
    int step = ns[idx] + 1;
    for (int ai = 0; ai * step <= remaining; ++ai) {
      a[idx] = ai;
      rec(idx + 1, remaining - ai * step);
    }
    a[idx] = 0;
  };
  rec(0, s);
  return total;
}

namespace {

// Edge set when every generator is a squarefree quadratic; nullopt otherwise.
std::optional<std::vector<std::pair<int, int>>> as_graph_edges(const MonomialIdeal& I) {
  std::vector<std::pair<int, int>> edges;
  for (const Monomial& g : I.generators()) {
    auto sup = g.support();
    if (g.degree() != 2 || sup.size() != 2) return std::nullopt;
    edges.push_back({sup[0], sup[1]});
  }
  return edges;
}

}  // namespace

int alpha_symbolic(const MonomialIdeal& I, int s, SymbolicEngine engine) {
  int value = alpha(symbolic_power(I, s, engine));
  // Edge ideals of clique-sums of bipartite graphs and odd cycles have the
  // closed form 2s - floor(s/(n_1+1)); a disagreement is an engine bug.
  if (auto edges = as_graph_edges(I)) {
    Graph g(I.ambient(), *edges);
    if (!g.has_isolated_vertex() && is_connected(g)) {
      GraphClassification c = classify(g);
      if (c.in_cliquesum_class) {
        int n1 = c.class_data->half_lengths.front();
        if (value != 2 * s - s / (n1 + 1))
          throw std::logic_error("symbolic initial degree disagrees with the closed form");
      }
    }
  }
  return value;
}

WaldschmidtEstimate waldschmidt(const MonomialIdeal& I, WaldschmidtMode mode, int sample_s_max) {
  if (!is_squarefree(I)) throw std::invalid_argument("waldschmidt: ideal is not squarefree");
  WaldschmidtEstimate est;
  switch (mode) {
    case WaldschmidtMode::CoverIdeal: {
      for (const auto& p : minimal_primes(I))
        if (p.size() != 2)
          throw std::invalid_argument("waldschmidt cover mode: a minimal prime is not an edge");
      Rational value(alpha_symbolic(I, 2), 2);
      est.exact = value;
      est.lower = est.upper = value;
      est.samples.push_back({2, alpha_symbolic(I, 2)});
      return est;
    }
    case WaldschmidtMode::EdgeIdealClass: {
      auto edges = as_graph_edges(I);
      if (!edges) throw std::invalid_argument("waldschmidt edge mode: not an edge ideal");
      Graph g(I.ambient(), std::move(*edges));
      GraphClassification c = classify(g);
      if (!c.in_cliquesum_class)
        throw std::invalid_argument("waldschmidt edge mode: graph is not in the clique-sum class");
      int n1 = c.class_data->half_lengths.front();
      Rational value(2 * n1 + 1, n1 + 1);
      est.exact = value;
      est.lower = est.upper = value;
      return est;
    }
    case WaldschmidtMode::Generic: {
      // Subadditivity of s -> alpha(I^(s)) makes every sample ratio an upper
      // bound; the limit is their infimum.  A certified lower bound comes
      // from alpha/alpha-hat <= rho_a <= h - 1/chi(H) for the hypergraph of
      // I.  No exactness is ever claimed in this mode.
      Rational upper(alpha(I), 1);
      for (int s = 1; s <= sample_s_max; ++s) {
        int as = alpha_symbolic(I, s);
        est.samples.push_back({s, as});
        upper = min(upper, Rational(as, s));
      }
      est.upper = upper;
      int height = big_height(I);
      Rational rho_a_upper(height);
      try {
        Hypergraph h = hypergraph_of_ideal(I);
        rho_a_upper = Rational(height) - Rational(1, hypergraph_chromatic_number(h));
      } catch (const std::invalid_argument&) {
        // Height-one primes admit no hypergraph; fall back to the big height.
      }
      est.lower = Rational(alpha(I)) / rho_a_upper;
      est.flags.push_back("generic mode: upper bound is the least sample ratio; no exact value");
      return est;
    }
  }
  throw std::logic_error("unreachable");
}

Rational fractional_chromatic_for_class(const Graph& g) {
  GraphClassification c = classify(g);
  if (!c.in_cliquesum_class)
    throw std::invalid_argument(
        "fractional_chromatic_for_class: graph is not in the clique-sum class");
  int n1 = c.class_data->half_lengths.front();
  return Rational(2) + Rational(1, n1);
}

}  // namespace resurgence
