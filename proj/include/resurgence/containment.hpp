#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "resurgence/graph.hpp"
#include "resurgence/monomial_ideal.hpp"
#include "resurgence/rational.hpp"
#include "resurgence/symbolic.hpp"

namespace resurgence {

struct ContainmentResult {
  int s = 0;
  int t = 0;
  bool holds = false;
  bool truncated = false;          // resource guard hit; `holds` not decided
  bool out_of_hypothesis = false;  // suite entry below its theorem threshold
  std::optional<Monomial> witness; // in I^(s) \ I^t when holds is false
  // Each minimal generator of I^(s) with a t-multiset of generators of I
  // whose product divides it (when certification was requested).
  std::optional<std::vector<std::pair<Monomial, std::vector<Monomial>>>> certificate;
};

/// Supplies I^(s) for varying s, caching results; the default uses the
/// generic engine, cover ideals of graphs get the degree-two fast path.
class SymbolicSource {
public:
  explicit SymbolicSource(MonomialIdeal base,
                          SymbolicEngine engine = SymbolicEngine::Enumeration);
  /// Fast path through J(G)^(2s) = (J(G)^(2))^s.
  static SymbolicSource for_cover_ideal(const Graph& g);

  const MonomialIdeal& base() const { return base_; }
  const MonomialIdeal& get(int s);

private:
  MonomialIdeal base_;
  SymbolicEngine engine_ = SymbolicEngine::Enumeration;
  std::optional<Graph> cover_graph_;  // set when the fast path applies
  std::map<int, MonomialIdeal> cache_;
};

struct ContainmentOptions {
  long long node_budget = kDefaultNodeBudget;
  SymbolicEngine engine = SymbolicEngine::Enumeration;
  SymbolicSource* source = nullptr;  // optional shared cache / fast path
};

/// Does I^(s) ⊆ I^t?  Witness = first failing minimal generator of I^(s) in
/// canonical order.  Resource exhaustion yields a truncated result, never a
/// silent verdict.
ContainmentResult check_containment(const MonomialIdeal& I, int s, int t, bool certify = false,
                                    const ContainmentOptions& opts = {});

struct SweepFailure {
  int s = 0;
  int t = 0;
  Monomial witness;
};

struct SweepCell {
  int s = 0;
  int t = 0;
  bool holds = false;
};

struct SweepResult {
  int s_max = 0;
  int t_max = 0;
  std::vector<SweepFailure> failures;        // all failing cells in the box
  std::optional<Rational> lower_bound;       // max s/t over failures with s/t > 1
  std::vector<SweepCell> cells;
  bool truncated = false;
};

struct SweepOptions {
  long long node_budget = kDefaultNodeBudget;
  SymbolicEngine engine = SymbolicEngine::Enumeration;
  SymbolicSource* source = nullptr;
  int threads = 1;
};

/// Evaluates the containment question over 1 <= t <= s <= s_max, t <= t_max.
/// Containment is monotone (I^{t+1} ⊆ I^t), so per s only the boundary is
/// searched; the monotone shape is asserted.
SweepResult sweep(const MonomialIdeal& I, int s_max, int t_max, const SweepOptions& opts = {});

/// Least p <= s_max with I^(p) != I^p, if any.
std::optional<int> least_noneq_power(const MonomialIdeal& I, int s_max);

struct GenGhmResult {
  bool containments_hold = false;
  std::optional<Rational> bound;       // (nk+n)/(nk+n-1) when they hold
  std::string failed_containment;      // which premise broke, with witness
  std::optional<Monomial> witness;
  bool rees_hypothesis_assumed = true; // the degree hypothesis is not decidable here
  int consequences_verified_to = 0;    // I^(a) = (I^(n))^q I^r checked for a <= this
};

/// Machine-checks P·I^(n) ⊆ I^n and I^(n) ⊆ P^k·I^(n-1); on success reports
/// the bound (nk+n)/(nk+n-1).  The symbolic Rees degree hypothesis is
/// recorded as an assumption; its consequences are verified for a <= a_max.
GenGhmResult gen_ghm_bound(const MonomialIdeal& I, int n, const MonomialIdeal& P, int k,
                           int a_max = -1);

/// J(G)^(2r-2c) ⊆ J(G)^r for r >= c·chi(G) and J(G)^(2r-2c-1) ⊆ J(G)^r for
/// r >= c·chi(G)+1; entries below the thresholds are recorded out of
/// hypothesis, not asserted.  Returned in (family, r) order: family one
/// first.
std::vector<ContainmentResult> cover_chi_containment_suite(const Graph& g, int c,
                                                           const std::vector<int>& r_values);

/// h - 1/chi(H) where h is the big height of J(H).
Rational hypergraph_rho_a_upper(const Hypergraph& h);

/// J(H)^(rh-h) ⊆ J(H)^r for r >= chi(H); below threshold recorded out of
/// hypothesis.
std::vector<ContainmentResult> hypergraph_containment_suite(const Hypergraph& h,
                                                            const std::vector<int>& r_values);

/// J_n(G)^b ⊆ I(G)^{bn + ceil((b - k_n)/2)} for b > k_n(G); b <= k_n is
/// rejected.
ContainmentResult tech3_containment_check(const Graph& g, int n, int b);

struct RestrictionCheckReport {
  bool edge_ok = false;
  bool cover_ok = false;
  int edge_failures_lifted = 0;
  int cover_failures_lifted = 0;
};

/// Sweeps the ideals of the induced subgraph on A and transports every
/// failure witness into the parent: edge witnesses lift verbatim, cover
/// witnesses after multiplication by (product of removed vertices)^s.
RestrictionCheckReport restriction_monotonicity_check(const Graph& g, const std::vector<int>& a,
                                                      int s_max, int t_max);

struct JoinCheckReport {
  Rational rho;            // exact, via chi = omega
  Rational alpha_ratio;    // alpha(J(G)) / alpha-hat(J(G))
  bool condition = false;  // the combinatorial side of the iff
  bool equality = false;   // rho == alpha_ratio
  bool iff_holds = false;
};

/// K_m^c * H with H nontrivial bipartite: rho(J(G)) equals the alpha ratio
/// iff m = alpha(J(H)) = |V(H)|/2.
JoinCheckReport join_characterization_check(int m, const Graph& h);
/// Complete multipartite: equality iff all parts have equal size.
JoinCheckReport join_characterization_check(const std::vector<int>& part_sizes);

}  // namespace resurgence
