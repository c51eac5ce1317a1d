#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "resurgence/monomial.hpp"
#include "resurgence/variable_set.hpp"

namespace resurgence {

/// Monomial ideal over a fixed ambient ring, stored by its unique minimal
/// generating set (pairwise incomparable under divisibility), sorted
/// lexicographically by exponent vector.  The unit ideal is a distinguished
/// flag, never a generator list containing 1; the empty generator set is the
/// zero ideal.
class MonomialIdeal {
public:
  MonomialIdeal() = default;

  static MonomialIdeal zero(VariableSet ambient);
  static MonomialIdeal unit(VariableSet ambient);
  /// Minimalizes the given generators (the `minimalize` operation).
  static MonomialIdeal make(VariableSet ambient, std::vector<Monomial> gens);

  const VariableSet& ambient() const { return ambient_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  bool is_zero() const { return !unit_ && gens_.empty(); }
  bool is_unit() const { return unit_; }
  bool is_proper() const { return !unit_; }

  bool operator==(const MonomialIdeal& o) const {
    return unit_ == o.unit_ && ambient_ == o.ambient_ && gens_ == o.gens_;
  }

  std::string str() const;

private:
  friend MonomialIdeal minimalize(VariableSet ambient, std::vector<Monomial> gens);

  VariableSet ambient_;
  std::vector<Monomial> gens_;
  bool unit_ = false;
};

MonomialIdeal minimalize(VariableSet ambient, std::vector<Monomial> gens);

MonomialIdeal sum(const MonomialIdeal& I, const MonomialIdeal& J);
MonomialIdeal product(const MonomialIdeal& I, const MonomialIdeal& J);
/// I^t for t >= 1; t == 0 is rejected.
MonomialIdeal power(const MonomialIdeal& I, int t);

/// Re-index I into a larger ambient via an injective variable mapping.
MonomialIdeal embed(const MonomialIdeal& I, const VariableSet& into,
                    const std::map<std::string, std::string>& mapping);
/// embed with the identity mapping on names (every variable of I must exist
/// in `into`).
MonomialIdeal extend_to(const MonomialIdeal& I, const VariableSet& into);

MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J);
MonomialIdeal colon(const MonomialIdeal& I, const Monomial& m);

bool contains_monomial(const MonomialIdeal& I, const Monomial& m);

struct MembershipResult {
  bool member = false;
  /// t generators of I whose product divides m (when member and requested).
  std::vector<Monomial> certificate;
  long long nodes = 0;
};

inline constexpr long long kDefaultNodeBudget = 10'000'000;

/// Decides m ∈ I^t by searching for t generators (with repetition) whose
/// product divides m.  Throws ResourceGuardError past the node budget.
MembershipResult member_of_power(const MonomialIdeal& I, const Monomial& m, int t,
                                 bool want_certificate = false,
                                 long long node_budget = kDefaultNodeBudget);

/// J ⊆ I, decided generator by generator.
bool contains_ideal(const MonomialIdeal& I, const MonomialIdeal& J);
bool equals(const MonomialIdeal& I, const MonomialIdeal& J);

/// Minimum generator degree; rejects the zero ideal.
int alpha(const MonomialIdeal& I);

bool is_squarefree(const MonomialIdeal& I);
Monomial lcm_of_generators(const MonomialIdeal& I);

/// Minimal primes of a squarefree proper nonzero ideal, as sorted variable
/// index subsets (the minimal transversals of the generator supports),
/// canonically ordered.
std::vector<std::vector<int>> minimal_primes(const MonomialIdeal& I);
int big_height(const MonomialIdeal& I);

/// Minimal transversals of a set system over {0..n-1}: the inclusion-minimal
/// sets hitting every input set.  Shared by minimal_primes and the graph
/// cover enumeration.
std::vector<std::vector<int>> minimal_transversals(const std::vector<std::vector<int>>& sets,
                                                   int nvars);

}  // namespace resurgence
