#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "resurgence/graph.hpp"
#include "resurgence/monomial_ideal.hpp"
#include "resurgence/rational.hpp"

namespace resurgence {

/// Cached data for symbolic power membership of a squarefree ideal: the
/// minimal primes, so that m ∈ I^(s) becomes one coordinate-sum test per
/// prime.
struct SymbolicPowerSpec {
  MonomialIdeal base;
  std::vector<std::vector<int>> primes;
  int s = 1;
};

SymbolicPowerSpec make_symbolic_spec(const MonomialIdeal& I, int s);

/// m ∈ I^(s) iff for every minimal prime P the sum of m's exponents over the
/// variables of P is at least s.
bool symbolic_member(const SymbolicPowerSpec& spec, const Monomial& m);

enum class SymbolicEngine {
  Enumeration,        // bounded lattice enumeration of minimal generators
  PrimeIntersection,  // iterated pairwise intersection of the P^s
  CrossCheck,         // run both, require agreement
};

/// Minimal generating set of I^(s) for squarefree proper nonzero I.
MonomialIdeal symbolic_power(const MonomialIdeal& I, int s,
                             SymbolicEngine engine = SymbolicEngine::Enumeration);

/// J(G)^(s) through the degree-two symbolic Rees structure:
/// J^(2s) = (J^(2))^s and J^(2s+1) = J·(J^(2))^s.
MonomialIdeal cover_symbolic_fast(const Graph& g, int s);

/// J_n(G): generated by the vertex products of the induced (2n+1)-cycles.
/// Zero ideal when no such cycle exists.
MonomialIdeal jn_ideal(const Graph& g, int n);

/// I(G)^(s) as the sum of I^t · J_{n_1}^{a_1} ··· J_{n_r}^{a_r} over
/// s = t + (n_1+1)a_1 + ... + (n_r+1)a_r, for graphs that are clique-sums of
/// bipartite graphs and odd cycles.
MonomialIdeal edge_symbolic_decomposition(const Graph& g, int s);

/// alpha of I^(s), by the generic engine.
int alpha_symbolic(const MonomialIdeal& I, int s,
                   SymbolicEngine engine = SymbolicEngine::Enumeration);

enum class WaldschmidtMode {
  CoverIdeal,      // all minimal primes have height 2: exact alpha(I^(2))/2
  EdgeIdealClass,  // edge ideal of a clique-sum of bipartite + odd cycles
  Generic,         // sampled bounds only
};

struct WaldschmidtEstimate {
  std::optional<Rational> exact;
  Rational lower{1};
  Rational upper{1};
  std::vector<std::pair<int, int>> samples;  // (s, alpha(I^(s)))
  std::vector<std::string> flags;
};

WaldschmidtEstimate waldschmidt(const MonomialIdeal& I, WaldschmidtMode mode,
                                int sample_s_max = 4);

/// chi_f(G) = 2 + 1/n_1 for the clique-sum class; errors outside it.
Rational fractional_chromatic_for_class(const Graph& g);

}  // namespace resurgence
