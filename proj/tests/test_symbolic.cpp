#include "doctest.h"

#include <random>

#include "resurgence/builtin_graphs.hpp"
#include "resurgence/graph_corpus.hpp"
#include "resurgence/graph_ideals.hpp"
#include "resurgence/graph_invariants.hpp"
#include "resurgence/monomial_ideal.hpp"
#include "resurgence/symbolic.hpp"

using namespace resurgence;

namespace {

Monomial all_ones(int n) { return Monomial(std::vector<int>(n, 1)); }

MonomialIdeal principal_product_of_vars(const VariableSet& v) {
  return MonomialIdeal::make(v, {Monomial(std::vector<int>(v.count(), 1))});
}

}  // namespace

TEST_CASE("symbolic membership is the prime coordinate-sum test") {
  Graph c5 = builtin_graph("C5");
  MonomialIdeal I = edge_ideal(c5);
  MonomialIdeal J = cover_ideal(c5);
  CHECK(symbolic_member(make_symbolic_spec(I, 3), all_ones(5)));
  CHECK(symbolic_member(make_symbolic_spec(J, 2), all_ones(5)));
  // A monomial with a zero sum on some edge prime fails at s = 1.
  CHECK_FALSE(symbolic_member(make_symbolic_spec(J, 1), Monomial(std::vector<int>(5, 0))));
  // Short on the x1x2 edge at s = 2.
  Monomial missing(std::vector<int>{0, 1, 1, 1, 1});
  CHECK_FALSE(symbolic_member(make_symbolic_spec(J, 2), missing));
}

TEST_CASE("symbolic membership agrees with the intersected prime powers") {
  std::mt19937 rng(41);
  std::uniform_int_distribution<int> exp(0, 3);
  Graph g = builtin_graph("bowtie");
  MonomialIdeal I = edge_ideal(g);
  for (int s = 1; s <= 3; ++s) {
    MonomialIdeal via_primes = symbolic_power(I, s, SymbolicEngine::PrimeIntersection);
    auto spec = make_symbolic_spec(I, s);
    for (int m = 0; m < 60; ++m) {
      std::vector<int> e(g.n());
      for (int& x : e) x = exp(rng);
      Monomial mm(std::move(e));
      CHECK(symbolic_member(spec, mm) == contains_monomial(via_primes, mm));
    }
  }
}

TEST_CASE("first symbolic power is the ideal itself") {
  Graph c5 = builtin_graph("C5");
  for (const MonomialIdeal& I : {edge_ideal(c5), cover_ideal(c5)})
    CHECK(equals(symbolic_power(I, 1), I));
}

TEST_CASE("symbolic powers of cycle ideals match their structure") {
  Graph c5 = builtin_graph("C5");
  MonomialIdeal I = edge_ideal(c5);
  MonomialIdeal J = cover_ideal(c5);
  // I(C5)^(3) = I^3 + (x1...x5) and J(C5)^(2) = J^2 + (x1...x5).
  CHECK(equals(symbolic_power(I, 3),
               sum(power(I, 3), principal_product_of_vars(c5.vertices()))));
  CHECK(equals(symbolic_power(J, 2),
               sum(power(J, 2), principal_product_of_vars(c5.vertices()))));
}

TEST_CASE("both engines agree on fixed ideals") {
  Graph c5 = builtin_graph("C5");
  Hypergraph h(VariableSet::numbered(5), {{0, 1, 2}, {2, 3, 4}, {4, 0, 1}});
  std::vector<MonomialIdeal> ideals = {edge_ideal(c5), cover_ideal(c5), cover_ideal(h)};
  for (const MonomialIdeal& I : ideals)
    for (int s = 1; s <= 3; ++s)
      CHECK_NOTHROW(symbolic_power(I, s, SymbolicEngine::CrossCheck));
}

TEST_CASE("cover fast path equals the generic engine") {
  for (const char* name : {"C3", "C5", "bowtie"}) {
    Graph g = builtin_graph(name);
    MonomialIdeal J = cover_ideal(g);
    CHECK(equals(cover_symbolic_fast(g, 1), J));
    for (int s = 2; s <= 4; ++s)
      CHECK(equals(cover_symbolic_fast(g, s), symbolic_power(J, s)));
  }
}

TEST_CASE("odd cycle ideals J_n") {
  CHECK(equals(jn_ideal(builtin_graph("C3"), 1),
               principal_product_of_vars(VariableSet::numbered(3))));
  CHECK(equals(jn_ideal(builtin_graph("C5"), 2),
               principal_product_of_vars(VariableSet::numbered(5))));
  MonomialIdeal two = jn_ideal(builtin_graph("two-triangles-d2"), 1);
  CHECK(two.generators().size() == 2);
  for (const auto& g : two.generators()) CHECK(g.degree() == 3);
  CHECK(jn_ideal(builtin_graph("C6"), 1).is_zero());
}

TEST_CASE("edge symbolic decomposition equals the generic engine") {
  Graph c5 = builtin_graph("C5");
  MonomialIdeal I = edge_ideal(c5);
  for (int s = 2; s <= 4; ++s)
    CHECK(equals(edge_symbolic_decomposition(c5, s), symbolic_power(I, s)));
  // Below the first cycle threshold the decomposition is the ordinary power.
  CHECK(equals(edge_symbolic_decomposition(c5, 2), power(I, 2)));

  Graph two = builtin_graph("two-triangles-d2");
  MonomialIdeal I2 = edge_ideal(two);
  for (int s = 2; s <= 4; ++s)
    CHECK(equals(edge_symbolic_decomposition(two, s), symbolic_power(I2, s)));
  // s = 4 includes the J_1^2 term: the two-triangle product is a generator.
  MonomialIdeal s4 = edge_symbolic_decomposition(two, 4);
  Monomial u1u2 = jn_ideal(two, 1).generators()[0] * jn_ideal(two, 1).generators()[1];
  CHECK(contains_monomial(s4, u1u2));
  CHECK_FALSE(contains_monomial(power(I2, 4), u1u2));

  CHECK_THROWS_AS(edge_symbolic_decomposition(builtin_graph("petersen"), 2),
                  std::invalid_argument);
}

TEST_CASE("initial degrees of symbolic powers") {
  Graph c5 = builtin_graph("C5");
  MonomialIdeal I = edge_ideal(c5);
  MonomialIdeal J = cover_ideal(c5);
  CHECK(alpha_symbolic(I, 3) == 5);
  CHECK(alpha_symbolic(I, 6) == 10);
  CHECK(alpha_symbolic(J, 2) == 5);
}

TEST_CASE("ordinary powers sit inside symbolic powers") {
  std::mt19937 rng(43);
  Graph g = random_connected_graph(rng, 4, 6);
  for (const MonomialIdeal& I : {edge_ideal(g), cover_ideal(g)})
    for (int s = 1; s <= 4; ++s) CHECK(contains_ideal(symbolic_power(I, s), power(I, s)));
}

TEST_CASE("symbolic powers multiply subadditively") {
  Graph c5 = builtin_graph("C5");
  MonomialIdeal I = edge_ideal(c5);
  for (int a = 1; a <= 2; ++a)
    for (int b = a; a + b <= 5; ++b) {
      MonomialIdeal prod = product(symbolic_power(I, a), symbolic_power(I, b));
      CHECK(contains_ideal(symbolic_power(I, a + b), prod));
    }
}

TEST_CASE("minimal symbolic generators have exponents at most s") {
  std::mt19937 rng(47);
  Graph g = random_connected_graph(rng, 4, 6);
  MonomialIdeal I = edge_ideal(g);
  for (int s = 1; s <= 4; ++s) {
    MonomialIdeal sym = symbolic_power(I, s);
    for (const Monomial& gen : sym.generators())
      for (int v = 0; v < gen.nvars(); ++v) CHECK(gen.exponent(v) <= s);
  }
}

TEST_CASE("restriction to induced subgraphs slices symbolic powers") {
  // I(H)^(s) consists exactly of the I(G)^(s) generators supported in V(H).
  Graph g = builtin_graph("cactus-c5-c4");
  std::vector<int> a{0, 1, 2, 3, 4};  // the C5 block
  Graph h = induced_subgraph(g, a);
  MonomialIdeal IG = edge_ideal(g);
  MonomialIdeal IH = edge_ideal(h);
  for (int s = 1; s <= 3; ++s) {
    MonomialIdeal big = symbolic_power(IG, s);
    std::vector<Monomial> sliced;
    for (const Monomial& gen : big.generators()) {
      bool inside = true;
      for (int v = 5; v < g.n(); ++v)
        if (gen.exponent(v) > 0) inside = false;
      if (!inside) continue;
      std::vector<int> e(5);
      for (int v = 0; v < 5; ++v) e[v] = gen.exponent(v);
      sliced.push_back(Monomial(std::move(e)));
    }
    CHECK(equals(MonomialIdeal::make(h.vertices(), sliced), symbolic_power(IH, s)));
  }
}

TEST_CASE("bipartite graphs have symbolic equal to ordinary") {
  for (const char* name : {"C6", "P4", "K2_2"}) {
    Graph g = builtin_graph(name);
    for (const MonomialIdeal& I : {edge_ideal(g), cover_ideal(g)})
      for (int s = 1; s <= 4; ++s) CHECK(equals(symbolic_power(I, s), power(I, s)));
  }
}

TEST_CASE("waldschmidt constants") {
  Graph c5 = builtin_graph("C5");
  auto cover = waldschmidt(cover_ideal(c5), WaldschmidtMode::CoverIdeal);
  REQUIRE(cover.exact);
  CHECK(*cover.exact == Rational(5, 2));

  auto edge = waldschmidt(edge_ideal(c5), WaldschmidtMode::EdgeIdealClass);
  REQUIRE(edge.exact);
  CHECK(*edge.exact == Rational(5, 3));

  // Bipartite cover ideals: alpha(J^(2)) = 2 alpha(J), so alpha-hat = alpha.
  Graph c6 = builtin_graph("C6");
  MonomialIdeal J6 = cover_ideal(c6);
  CHECK(alpha_symbolic(J6, 2) == 2 * alpha(J6));
  auto bip = waldschmidt(J6, WaldschmidtMode::CoverIdeal);
  CHECK(*bip.exact == Rational(alpha(J6)));

  auto generic = waldschmidt(cover_ideal(c5), WaldschmidtMode::Generic, 4);
  CHECK_FALSE(generic.exact);
  CHECK(generic.upper == Rational(5, 2));
  CHECK(generic.lower <= generic.upper);
  CHECK(generic.samples.size() == 4);

  CHECK_THROWS_AS(waldschmidt(edge_ideal(c5), WaldschmidtMode::CoverIdeal),
                  std::invalid_argument);
  CHECK_THROWS_AS(waldschmidt(cover_ideal(c5), WaldschmidtMode::EdgeIdealClass),
                  std::invalid_argument);
}

TEST_CASE("fractional chromatic number for the clique-sum class") {
  CHECK(fractional_chromatic_for_class(builtin_graph("C5")) == Rational(5, 2));
  CHECK(fractional_chromatic_for_class(builtin_graph("two-triangles-d2")) == Rational(3));
  CHECK_THROWS_AS(fractional_chromatic_for_class(builtin_graph("C6")), std::invalid_argument);
}

TEST_CASE("vertex-product powers detect the chromatic number") {
  // (x1...xn)^(r-1) lies in J(G)^r exactly when r >= chi(G); ties the
  // coloring solver to the cover ideal arithmetic.
  std::mt19937 rng(53);
  std::vector<Graph> graphs = {builtin_graph("C5"), builtin_graph("K4"),
                               builtin_graph("K2_2_2"), builtin_graph("bowtie"),
                               random_connected_graph(rng, 4, 6)};
  for (const Graph& g : graphs) {
    MonomialIdeal J = cover_ideal(g);
    int chi = chromatic_number(g);
    Monomial all(std::vector<int>(g.n(), 1));
    for (int r = std::max(2, chi - 1); r <= chi + 1; ++r) {
      bool member = member_of_power(J, all.pow(r - 1), r).member;
      CHECK(member == (r >= chi));
    }
  }
}

TEST_CASE("cover fast path matches the generic engine on random graphs") {
  std::mt19937 rng(59);
  for (int trial = 0; trial < 8; ++trial) {
    Graph g = random_connected_graph(rng, 4, 6);
    MonomialIdeal J = cover_ideal(g);
    for (int s = 2; s <= 4; ++s)
      CHECK(equals(cover_symbolic_fast(g, s), symbolic_power(J, s)));
  }
}
