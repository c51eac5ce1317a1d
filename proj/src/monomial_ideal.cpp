#include "resurgence/monomial_ideal.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <set>
#include <unordered_map>

#include "resurgence/errors.hpp"

namespace resurgence {

namespace {

void check_ambient(const MonomialIdeal& I, const MonomialIdeal& J) {
  if (I.ambient() != J.ambient())
    throw std::invalid_argument("ambient variable sets differ");
}

void check_over(const MonomialIdeal& I, const Monomial& m) {
  if (m.nvars() != I.ambient().count())
    throw std::invalid_argument("monomial length mismatch with ambient");
}

}  // namespace

MonomialIdeal MonomialIdeal::zero(VariableSet ambient) {
  MonomialIdeal I;
  I.ambient_ = std::move(ambient);
  return I;
}

MonomialIdeal MonomialIdeal::unit(VariableSet ambient) {
  MonomialIdeal I;
  I.ambient_ = std::move(ambient);
  I.unit_ = true;
  return I;
}

MonomialIdeal MonomialIdeal::make(VariableSet ambient, std::vector<Monomial> gens) {
  return minimalize(std::move(ambient), std::move(gens));
}

std::string MonomialIdeal::str() const {
  if (is_unit()) return "(1)";
  if (is_zero()) return "(0)";
  std::string out = "(";
  for (size_t i = 0; i < gens_.size(); ++i) {
    if (i) out += ", ";
    out += gens_[i].str(ambient_);
  }
  return out + ")";
}

MonomialIdeal minimalize(VariableSet ambient, std::vector<Monomial> gens) {
  const int n = ambient.count();
  for (const Monomial& g : gens)
    if (g.nvars() != n) throw std::invalid_argument("monomial length mismatch with ambient");

  for (const Monomial& g : gens)
    if (g.is_unit()) return MonomialIdeal::unit(std::move(ambient));

  // Degree-sorted scan: anything divisible by an earlier survivor is redundant.
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return a < b;
  });
  std::vector<Monomial> kept;
  for (const Monomial& g : gens) {
    bool redundant = false;
    for (const Monomial& k : kept)
      if (k.divides(g)) { redundant = true; break; }
    if (!redundant) kept.push_back(g);
  }
  std::sort(kept.begin(), kept.end());
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());

  MonomialIdeal I = MonomialIdeal::zero(std::move(ambient));
  I.gens_ = std::move(kept);
  return I;
}

MonomialIdeal sum(const MonomialIdeal& I, const MonomialIdeal& J) {
  check_ambient(I, J);
  if (I.is_unit() || J.is_unit()) return MonomialIdeal::unit(I.ambient());
  std::vector<Monomial> gens = I.generators();
  gens.insert(gens.end(), J.generators().begin(), J.generators().end());
  return minimalize(I.ambient(), std::move(gens));
}

MonomialIdeal product(const MonomialIdeal& I, const MonomialIdeal& J) {
  check_ambient(I, J);
  if (I.is_zero() || J.is_zero()) return MonomialIdeal::zero(I.ambient());
  if (I.is_unit()) return J;
  if (J.is_unit()) return I;
  std::vector<Monomial> gens;
  gens.reserve(I.generators().size() * J.generators().size());
  for (const Monomial& a : I.generators())
    for (const Monomial& b : J.generators()) gens.push_back(a * b);
  return minimalize(I.ambient(), std::move(gens));
}

MonomialIdeal power(const MonomialIdeal& I, int t) {
  if (t <= 0)
    throw std::invalid_argument("power requires t >= 1 (unit ideal is not represented as I^0)");
  MonomialIdeal r = I;
  for (int i = 1; i < t; ++i) r = product(r, I);
  return r;
}

MonomialIdeal embed(const MonomialIdeal& I, const VariableSet& into,
                    const std::map<std::string, std::string>& mapping) {
  const VariableSet& from = I.ambient();
  std::vector<int> image(from.count(), -1);
  std::set<int> used;
  for (int i = 0; i < from.count(); ++i) {
    auto it = mapping.find(from.name(i));
    if (it == mapping.end())
      throw std::invalid_argument("embed: variable not mapped: " + from.name(i));
    int j = into.index_of(it->second);
    if (j < 0) throw std::invalid_argument("embed: image variable missing: " + it->second);
    if (!used.insert(j).second)
      throw std::invalid_argument("embed: mapping is not injective at " + it->second);
    image[i] = j;
  }
  if (I.is_unit()) return MonomialIdeal::unit(into);
  std::vector<Monomial> gens;
  gens.reserve(I.generators().size());
  for (const Monomial& g : I.generators()) {
    std::vector<int> e(into.count(), 0);
    for (int i = 0; i < from.count(); ++i) e[image[i]] = g.exponent(i);
    gens.push_back(Monomial(std::move(e)));
  }
  return minimalize(into, std::move(gens));
}

MonomialIdeal extend_to(const MonomialIdeal& I, const VariableSet& into) {
  std::map<std::string, std::string> mapping;
  for (const std::string& name : I.ambient().names()) mapping[name] = name;
  return embed(I, into, mapping);
}

MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J) {
  check_ambient(I, J);
  if (I.is_unit()) return J;
  if (J.is_unit()) return I;
  if (I.is_zero() || J.is_zero()) return MonomialIdeal::zero(I.ambient());
  std::vector<Monomial> gens;
  gens.reserve(I.generators().size() * J.generators().size());
  for (const Monomial& a : I.generators())
    for (const Monomial& b : J.generators()) gens.push_back(Monomial::lcm(a, b));
  return minimalize(I.ambient(), std::move(gens));
}

MonomialIdeal colon(const MonomialIdeal& I, const Monomial& m) {
  check_over(I, m);
  if (I.is_unit() || I.is_zero()) return I;
  std::vector<Monomial> gens;
  gens.reserve(I.generators().size());
  for (const Monomial& g : I.generators()) gens.push_back(g.colon_by(m));
  return minimalize(I.ambient(), std::move(gens));
}

bool contains_monomial(const MonomialIdeal& I, const Monomial& m) {
  check_over(I, m);
  if (I.is_unit()) return true;
  for (const Monomial& g : I.generators())
    if (g.divides(m)) return true;
  return false;
}

namespace {

// Memoized covering search for m ∈ I^t.  Residual exponents are clamped at
// what the remaining t generators can still consume, so states that differ
// only in unusable surplus coincide.
class PowerMembership {
public:
  PowerMembership(const MonomialIdeal& I, long long budget)
      : gens_(I.generators()), budget_(budget), nvars_(I.ambient().count()) {
    std::sort(gens_.begin(), gens_.end(), [](const Monomial& a, const Monomial& b) {
      int da = a.degree(), db = b.degree();
      if (da != db) return da > db;
      return a < b;
    });
    min_deg_ = gens_.empty() ? 0 : gens_.back().degree();
    max_exp_.assign(nvars_, 0);
    for (const Monomial& g : gens_)
      for (int i = 0; i < nvars_; ++i) max_exp_[i] = std::max(max_exp_[i], g.exponent(i));
  }

  bool decide(const Monomial& m, int t) {
    return search(m.exponents(), t);
  }

  // Rebuilds one witness multiset by walking the memoized table.
  bool reconstruct(const Monomial& m, int t, std::vector<Monomial>& out) {
    std::vector<int> residual = m.exponents();
    for (int rem = t; rem > 0; --rem) {
      bool advanced = false;
      for (const Monomial& g : gens_) {
        if (!leq(g.exponents(), residual)) continue;
        std::vector<int> next = residual;
        for (int i = 0; i < nvars_; ++i) next[i] -= g.exponent(i);
        if (search(next, rem - 1)) {
          out.push_back(g);
          residual = std::move(next);
          advanced = true;
          break;
        }
      }
      if (!advanced) return false;
    }
    return true;
  }

  long long nodes() const { return nodes_; }

private:
  static bool leq(const std::vector<int>& a, const std::vector<int>& b) {
    for (size_t i = 0; i < a.size(); ++i)
      if (a[i] > b[i]) return false;
    return true;
  }

  bool search(std::vector<int> residual, int t) {
    if (t == 0) return true;
    int deg = 0;
    for (int i = 0; i < nvars_; ++i) {
      residual[i] = std::min(residual[i], t * max_exp_[i]);
      deg += residual[i];
    }
    if (deg < t * min_deg_) return false;
    std::string key(reinterpret_cast<const char*>(residual.data()),
                    residual.size() * sizeof(int));
    key.append(reinterpret_cast<const char*>(&t), sizeof(int));
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    if (++nodes_ > budget_)
      throw ResourceGuardError("member_of_power exceeded node budget");
    bool ok = false;
    for (const Monomial& g : gens_) {
      if (!leq(g.exponents(), residual)) continue;
      std::vector<int> next = residual;
      for (int i = 0; i < nvars_; ++i) next[i] -= g.exponent(i);
      if (search(std::move(next), t - 1)) { ok = true; break; }
    }
    memo_.emplace(std::move(key), ok);
    return ok;
  }

  std::vector<Monomial> gens_;
  long long budget_;
  int nvars_;
  int min_deg_ = 0;
  std::vector<int> max_exp_;
  std::unordered_map<std::string, bool> memo_;
  long long nodes_ = 0;
};

}  // namespace

MembershipResult member_of_power(const MonomialIdeal& I, const Monomial& m, int t,
                                 bool want_certificate, long long node_budget) {
  check_over(I, m);
  if (t <= 0) throw std::invalid_argument("member_of_power requires t >= 1");
  MembershipResult res;
  if (I.is_unit()) {
    res.member = true;
    if (want_certificate) res.certificate.assign(t, Monomial::unit(I.ambient().count()));
    return res;
  }
  if (I.is_zero()) return res;
  PowerMembership search(I, node_budget);
  res.member = search.decide(m, t);
  if (res.member && want_certificate) search.reconstruct(m, t, res.certificate);
  res.nodes = search.nodes();
  return res;
}

bool contains_ideal(const MonomialIdeal& I, const MonomialIdeal& J) {
  check_ambient(I, J);
  if (I.is_unit() || J.is_zero()) return true;
  if (J.is_unit()) return I.is_unit();
  for (const Monomial& g : J.generators())
    if (!contains_monomial(I, g)) return false;
  return true;
}

bool equals(const MonomialIdeal& I, const MonomialIdeal& J) {
  return contains_ideal(I, J) && contains_ideal(J, I);
}

int alpha(const MonomialIdeal& I) {
  if (I.is_zero()) throw std::invalid_argument("alpha of the zero ideal");
  if (I.is_unit()) return 0;
  int best = I.generators().front().degree();
  for (const Monomial& g : I.generators()) best = std::min(best, g.degree());
  return best;
}

bool is_squarefree(const MonomialIdeal& I) {
  for (const Monomial& g : I.generators())
    if (!g.is_squarefree()) return false;
  return true;
}

Monomial lcm_of_generators(const MonomialIdeal& I) {
  if (I.is_zero()) throw std::invalid_argument("lcm_of_generators of the zero ideal");
  if (I.is_unit()) return Monomial::unit(I.ambient().count());
  Monomial acc = I.generators().front();
  for (const Monomial& g : I.generators()) acc = Monomial::lcm(acc, g);
  return acc;
}

std::vector<std::vector<int>> minimal_transversals(const std::vector<std::vector<int>>& sets,
                                                   int nvars) {
  std::vector<std::vector<int>> result;
  std::vector<int> chosen;
  // Branch on the first uncovered set; every transversal must meet it.
  auto covered = [&](const std::vector<int>& s) {
    for (int v : s)
      if (std::find(chosen.begin(), chosen.end(), v) != chosen.end()) return true;
    return false;
  };
  std::function<void()> rec = [&]() {
    const std::vector<int>* pick = nullptr;
    for (const auto& s : sets)
      if (!covered(s)) {
        if (!pick || s.size() < pick->size()) pick = &s;
      }
    if (!pick) {
      std::vector<int> t = chosen;
      std::sort(t.begin(), t.end());
      result.push_back(std::move(t));
      return;
    }
    for (int v : *pick) {
      chosen.push_back(v);
      rec();
      chosen.pop_back();
    }
  };
  rec();
  // Irredundancy: drop duplicates and supersets.
  std::sort(result.begin(), result.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });
  result.erase(std::unique(result.begin(), result.end()), result.end());
  std::vector<std::vector<int>> minimal;
  for (const auto& t : result) {
    bool has_subset = false;
    for (const auto& k : minimal) {
      if (std::includes(t.begin(), t.end(), k.begin(), k.end())) { has_subset = true; break; }
    }
    if (!has_subset) minimal.push_back(t);
  }
  std::sort(minimal.begin(), minimal.end());
  (void)nvars;
  return minimal;
}

std::vector<std::vector<int>> minimal_primes(const MonomialIdeal& I) {
  if (!is_squarefree(I)) throw std::invalid_argument("minimal_primes: ideal is not squarefree");
  if (I.is_zero() || I.is_unit())
    throw std::invalid_argument("minimal_primes: ideal must be proper and nonzero");
  std::vector<std::vector<int>> supports;
  supports.reserve(I.generators().size());
  for (const Monomial& g : I.generators()) supports.push_back(g.support());
  return minimal_transversals(supports, I.ambient().count());
}

int big_height(const MonomialIdeal& I) {
  size_t h = 0;
  for (const auto& p : minimal_primes(I)) h = std::max(h, p.size());
  return (int)h;
}

}  // namespace resurgence
