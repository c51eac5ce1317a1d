#pragma once

#include <optional>
#include <string>
#include <vector>

#include "resurgence/containment.hpp"
#include "resurgence/graph.hpp"
#include "resurgence/monomial_ideal.hpp"
#include "resurgence/rational.hpp"
#include "resurgence/symbolic.hpp"

namespace resurgence {

/// One bound with its provenance: which theorem produced it, from which
/// inputs, so a reader can reproduce it.
struct BoundProvenance {
  std::string quantity;  // "rho" or "rho_a"
  std::string bound;     // "exact", "lower", "upper"
  Rational value;
  std::string tag;       // theorem tag
  std::string inputs;    // parameters the formula was evaluated at
};

struct ValueOrInterval {
  std::optional<Rational> exact;
  Rational lower{1};
  Rational upper{1};

  bool is_exact() const { return exact.has_value(); }
  static ValueOrInterval exactly(Rational v) { return {v, v, v}; }
  static ValueOrInterval between(Rational lo, Rational hi) { return {std::nullopt, lo, hi}; }
};

struct ResurgenceReport {
  std::string ideal;
  ValueOrInterval rho;
  ValueOrInterval rho_a;
  std::vector<BoundProvenance> provenance;
  std::vector<SweepFailure> witnesses;  // re-verified failing pairs
  std::vector<SweepCell> containments;
  std::vector<std::string> flags;
  bool truncated = false;
};

struct EngineOptions {
  int sweep_s_max = 6;  // box for interval fallbacks; shrunk to what the
  int sweep_t_max = 6;  // enumeration engine can afford on many variables
  long long node_budget = kDefaultNodeBudget;
  bool corroborate = true;  // append agreeing provenance from other classes
  int threads = 1;
};

/// 2 - 2/chi(G), the theorem upper bound for rho(J(G)).
Rational cover_upper_chi(const Graph& g);

/// alpha(I)/alpha-hat(I); exact when the Waldschmidt constant is exact for
/// the mode, otherwise a certified lower bound via the sampled upper bound
/// of alpha-hat.
Rational rho_alpha_lower(const MonomialIdeal& I, WaldschmidtMode mode);

/// Exact resurgence and asymptotic resurgence of J(G) where a theorem
/// applies (bipartite, odd cycle, complete multipartite, chi = omega,
/// clique-sum recursion, cactus); otherwise a provenance-tagged interval.
ResurgenceReport exact_cover_resurgence(const Graph& g, const EngineOptions& opts = {});

/// Exact values for I(G): bipartite graphs, and clique-sums of bipartite
/// graphs and odd cycles (exact rho_a always; exact rho for a single cycle
/// length); otherwise intervals.
ResurgenceReport exact_edge_resurgence(const Graph& g, const EngineOptions& opts = {});

/// max rule for products of ideals in disjoint variables.
ResurgenceReport disjoint_product_rho(const std::vector<ResurgenceReport>& parts);

struct SumPart {
  MonomialIdeal ideal;
  std::string label;
  std::optional<Rational> rho_exact;  // supplied when known (e.g. 1, or a theorem value)
};

struct SumRhoResult {
  ResurgenceReport report;
  std::vector<std::optional<int>> p_values;   // least non-equal power per part
  std::optional<Rational> formula_value;      // max over r of the p-sum ratios
  std::optional<SweepFailure> witness;        // re-verified tech-res witness
};

/// Resurgence of a sum of ideals in pairwise disjoint variables: parts whose
/// symbolic and ordinary powers agree up to the bound drop out; the p-sum
/// formula is exact when every remaining part has resurgence one, and a
/// witness-certified lower bound otherwise.
SumRhoResult disjoint_sum_rho(const std::vector<SumPart>& parts, int p_search_bound = 6);

}  // namespace resurgence
