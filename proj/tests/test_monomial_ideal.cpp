#include "doctest.h"

#include <random>

#include "resurgence/builtin_graphs.hpp"
#include "resurgence/errors.hpp"
#include "resurgence/graph_ideals.hpp"
#include "resurgence/monomial_ideal.hpp"

#include "oracles.hpp"

using namespace resurgence;

namespace {

VariableSet vars3() { return VariableSet::numbered(3); }

Monomial mono(std::vector<int> e) { return Monomial(std::move(e)); }

MonomialIdeal ideal(const VariableSet& v, std::vector<std::vector<int>> exps) {
  std::vector<Monomial> gens;
  for (auto& e : exps) gens.push_back(Monomial(std::move(e)));
  return MonomialIdeal::make(v, std::move(gens));
}

MonomialIdeal random_ideal(std::mt19937& rng, int nvars, int ngens, int max_exp) {
  std::uniform_int_distribution<int> exp(0, max_exp);
  std::vector<Monomial> gens;
  for (int i = 0; i < ngens; ++i) {
    std::vector<int> e(nvars);
    bool nonzero = false;
    for (int& x : e) {
      x = exp(rng);
      nonzero = nonzero || x > 0;
    }
    if (!nonzero) e[0] = 1;
    gens.push_back(Monomial(std::move(e)));
  }
  return MonomialIdeal::make(VariableSet::numbered(nvars), std::move(gens));
}

}  // namespace

TEST_CASE("minimalize drops divisible generators") {
  auto I = ideal(vars3(), {{1, 0, 0}, {1, 1, 0}});
  REQUIRE(I.generators().size() == 1);
  CHECK(I.generators()[0] == mono({1, 0, 0}));

  auto zero = ideal(vars3(), {});
  CHECK(zero.is_zero());
  CHECK_FALSE(zero.is_unit());

  auto J = ideal(vars3(), {{1, 1, 0}, {0, 1, 1}, {1, 1, 1}});
  CHECK(J.generators().size() == 2);
}

TEST_CASE("minimalize is idempotent and canonical") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    MonomialIdeal I = random_ideal(rng, 4, 6, 3);
    MonomialIdeal again = MonomialIdeal::make(I.ambient(), I.generators());
    CHECK(I == again);
    for (size_t a = 0; a < I.generators().size(); ++a)
      for (size_t b = 0; b < I.generators().size(); ++b)
        if (a != b) CHECK_FALSE(I.generators()[a].divides(I.generators()[b]));
  }
}

TEST_CASE("unit ideal is a flag, never a listed generator") {
  auto I = ideal(vars3(), {{0, 0, 0}, {1, 0, 0}});
  CHECK(I.is_unit());
  CHECK(I.generators().empty());
  CHECK(contains_monomial(I, mono({0, 0, 0})));
}

TEST_CASE("sum, product, power basics") {
  auto x1 = ideal(vars3(), {{1, 0, 0}});
  auto x2 = ideal(vars3(), {{0, 1, 0}});
  CHECK(sum(x1, x2).generators().size() == 2);

  auto I = ideal(vars3(), {{1, 1, 0}, {0, 1, 1}});
  auto I2 = power(I, 2);
  REQUIRE(I2.generators().size() == 3);
  CHECK(I2.generators()[0] == mono({0, 2, 2}));
  CHECK(contains_monomial(I2, mono({2, 2, 0})));
  CHECK(contains_monomial(I2, mono({1, 2, 1})));

  auto zero = MonomialIdeal::zero(vars3());
  CHECK(product(I, zero).is_zero());
  CHECK_THROWS_AS(power(I, 0), std::invalid_argument);
}

TEST_CASE("embed re-indexes generators") {
  VariableSet small({"x1"});
  VariableSet big({"x1", "y1"});
  auto I = ideal(small, {{1}});
  auto E = embed(I, big, {{"x1", "x1"}});
  CHECK(E.ambient() == big);
  CHECK(E.generators()[0] == mono({1, 0}));

  VariableSet ys({"y1", "y2"});
  VariableSet xyz({"x1", "y1", "y2"});
  auto J = ideal(ys, {{1, 1}});
  auto EJ = embed(J, xyz, {{"y1", "y1"}, {"y2", "y2"}});
  CHECK(EJ.generators()[0] == mono({0, 1, 1}));

  CHECK_THROWS_AS(embed(ideal(ys, {{1, 1}}), xyz, {{"y1", "x1"}, {"y2", "x1"}}),
                  std::invalid_argument);
}

TEST_CASE("intersect via lcm pairs") {
  auto a = ideal(vars3(), {{1, 0, 0}});
  auto b = ideal(vars3(), {{0, 1, 0}});
  CHECK(intersect(a, b).generators()[0] == mono({1, 1, 0}));

  auto I = ideal(vars3(), {{1, 0, 0}, {0, 1, 0}});
  auto J = ideal(vars3(), {{0, 1, 0}, {0, 0, 1}});
  auto meet = intersect(I, J);
  CHECK(contains_monomial(meet, mono({0, 1, 0})));
  CHECK(contains_monomial(meet, mono({1, 0, 1})));
  CHECK(meet.generators().size() == 2);

  CHECK(equals(intersect(I, MonomialIdeal::unit(vars3())), I));
  VariableSet other({"a", "b", "c"});
  CHECK_THROWS_AS(intersect(I, ideal(other, {{1, 0, 0}})), std::invalid_argument);
}

TEST_CASE("intersection agrees with pointwise divisibility") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> exp(0, 4);
  for (int trial = 0; trial < 20; ++trial) {
    MonomialIdeal I = random_ideal(rng, 4, 4, 2);
    MonomialIdeal J = random_ideal(rng, 4, 4, 2);
    MonomialIdeal meet = intersect(I, J);
    for (int m = 0; m < 30; ++m) {
      std::vector<int> e(4);
      for (int& x : e) x = exp(rng);
      Monomial mm(std::move(e));
      CHECK(contains_monomial(meet, mm) ==
            (contains_monomial(I, mm) && contains_monomial(J, mm)));
    }
  }
}

TEST_CASE("colon of generators") {
  auto I = ideal(vars3(), {{1, 1, 0}, {0, 1, 1}});
  auto C = colon(I, mono({0, 1, 0}));
  REQUIRE(C.generators().size() == 2);
  CHECK(C.generators()[0] == mono({0, 0, 1}));
  CHECK(C.generators()[1] == mono({1, 0, 0}));
  CHECK(equals(colon(I, mono({0, 0, 0})), I));
}

TEST_CASE("colon of a cover ideal matches the pointwise definition") {
  Graph c5 = builtin_graph("C5");
  MonomialIdeal J = cover_ideal(c5);
  Monomial x5 = Monomial::variable(4, 5);
  MonomialIdeal Q = colon(J, x5);
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> exp(0, 2);
  for (int m = 0; m < 200; ++m) {
    std::vector<int> e(5);
    for (int& x : e) x = exp(rng);
    Monomial w(std::move(e));
    CHECK(contains_monomial(Q, w) == oracles::colon_contains_bruteforce(J, x5, w));
  }
}

TEST_CASE("contains_monomial") {
  auto I = ideal(vars3(), {{1, 1, 0}});
  CHECK(contains_monomial(I, mono({1, 1, 1})));
  CHECK_FALSE(contains_monomial(I, mono({1, 0, 0})));
  CHECK_FALSE(contains_monomial(MonomialIdeal::zero(vars3()), mono({1, 1, 1})));
}

TEST_CASE("member_of_power examples") {
  auto I = ideal(vars3(), {{1, 1, 0}, {0, 1, 1}});
  auto res = member_of_power(I, mono({1, 2, 1}), 2, true);
  CHECK(res.member);
  REQUIRE(res.certificate.size() == 2);
  CHECK((res.certificate[0] * res.certificate[1]).divides(mono({1, 2, 1})));

  Graph c5 = builtin_graph("C5");
  MonomialIdeal edge = edge_ideal(c5);
  Monomial all(std::vector<int>(5, 1));
  CHECK_FALSE(member_of_power(edge, all, 3).member);
  CHECK(oracles::alpha_bruteforce_power(edge, 3) == 6);

  MonomialIdeal cover = cover_ideal(c5);
  std::vector<int> e(5, 1);
  e[0] = 2;
  CHECK(member_of_power(cover, Monomial(e), 2).member);
}

TEST_CASE("member_of_power agrees with the brute-force oracle") {
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> exp(0, 5);
  for (int trial = 0; trial < 12; ++trial) {
    MonomialIdeal I = random_ideal(rng, 4, 5, 2);
    for (int t = 1; t <= 4; ++t) {
      for (int m = 0; m < 12; ++m) {
        std::vector<int> e(4);
        for (int& x : e) x = exp(rng);
        Monomial mm(std::move(e));
        CHECK(member_of_power(I, mm, t).member == oracles::member_of_power_bruteforce(I, mm, t));
      }
    }
  }
}

TEST_CASE("member_of_power agrees with membership in the expanded power") {
  std::mt19937 rng(29);
  std::uniform_int_distribution<int> exp(0, 6);
  for (int trial = 0; trial < 10; ++trial) {
    MonomialIdeal I = random_ideal(rng, 4, 6, 2);
    for (int t = 1; t <= 4; ++t) {
      MonomialIdeal It = power(I, t);
      for (int m = 0; m < 10; ++m) {
        std::vector<int> e(4);
        for (int& x : e) x = exp(rng);
        Monomial mm(std::move(e));
        CHECK(member_of_power(I, mm, t).member == contains_monomial(It, mm));
      }
    }
  }
}

TEST_CASE("member_of_power respects the node budget") {
  Graph c7 = builtin_graph("C7");
  MonomialIdeal J = cover_ideal(c7);
  std::vector<int> e(7, 8);
  CHECK_THROWS_AS(member_of_power(J, Monomial(e), 12, false, 5), ResourceGuardError);
}

TEST_CASE("contains_ideal and equals") {
  auto I = ideal(vars3(), {{1, 1, 0}, {0, 1, 1}});
  CHECK(contains_ideal(I, power(I, 2)));
  CHECK_FALSE(contains_ideal(ideal(vars3(), {{1, 0, 0}}), ideal(vars3(), {{0, 1, 0}})));
  std::vector<Monomial> with_redundant = I.generators();
  with_redundant.push_back(mono({2, 1, 0}));
  CHECK(equals(I, MonomialIdeal::make(vars3(), with_redundant)));
}

TEST_CASE("alpha") {
  Graph c5 = builtin_graph("C5");
  CHECK(alpha(cover_ideal(c5)) == 3);
  CHECK(alpha(edge_ideal(c5)) == 2);
  CHECK(alpha(power(edge_ideal(c5), 3)) == 6);
  CHECK_THROWS_AS(alpha(MonomialIdeal::zero(vars3())), std::invalid_argument);
}

TEST_CASE("alpha adds over products") {
  std::mt19937 rng(31);
  Graph c5 = builtin_graph("C5");
  MonomialIdeal I = edge_ideal(c5);
  for (int t = 1; t <= 4; ++t) CHECK(alpha(power(I, t)) == t * alpha(I));

  MonomialIdeal A = random_ideal(rng, 3, 3, 2);
  VariableSet joint({"x1", "x2", "x3", "y1", "y2", "y3"});
  MonomialIdeal B = embed(random_ideal(rng, 3, 3, 2), joint,
                          {{"x1", "y1"}, {"x2", "y2"}, {"x3", "y3"}});
  MonomialIdeal EA = extend_to(A, joint);
  CHECK(alpha(product(EA, B)) == alpha(EA) + alpha(B));
}

TEST_CASE("product equals intersection for ideals in disjoint variables") {
  std::mt19937 rng(37);
  VariableSet joint({"x1", "x2", "x3", "y1", "y2", "y3"});
  for (int trial = 0; trial < 10; ++trial) {
    MonomialIdeal A = extend_to(random_ideal(rng, 3, 3, 2), joint);
    MonomialIdeal B = embed(random_ideal(rng, 3, 3, 2), joint,
                            {{"x1", "y1"}, {"x2", "y2"}, {"x3", "y3"}});
    CHECK(equals(product(A, B), intersect(A, B)));
  }
}

TEST_CASE("squarefree predicate and generator lcm") {
  Graph c5 = builtin_graph("C5");
  Graph c3 = builtin_graph("C3");
  CHECK(is_squarefree(cover_ideal(c5)));
  CHECK_FALSE(is_squarefree(power(cover_ideal(c3), 2)));
  CHECK(lcm_of_generators(cover_ideal(c5)) == Monomial(std::vector<int>(5, 1)));
  CHECK_THROWS_AS(lcm_of_generators(MonomialIdeal::zero(vars3())), std::invalid_argument);
}

TEST_CASE("minimal primes of squarefree ideals") {
  Graph c3 = builtin_graph("C3");
  auto primes = minimal_primes(edge_ideal(c3));
  std::vector<std::vector<int>> expect = {{0, 1}, {0, 2}, {1, 2}};
  CHECK(primes == expect);

  Graph c5 = builtin_graph("C5");
  auto cover_primes = minimal_primes(cover_ideal(c5));
  std::vector<std::vector<int>> edges;
  for (auto [a, b] : c5.edges()) edges.push_back({a, b});
  std::sort(edges.begin(), edges.end());
  CHECK(cover_primes == edges);

  auto principal = ideal(vars3(), {{1, 0, 0}});
  CHECK(minimal_primes(principal) == std::vector<std::vector<int>>{{0}});

  CHECK_THROWS_AS(minimal_primes(ideal(vars3(), {{2, 0, 0}})), std::invalid_argument);
  CHECK_THROWS_AS(minimal_primes(MonomialIdeal::zero(vars3())), std::invalid_argument);
}

TEST_CASE("big height") {
  Graph c5 = builtin_graph("C5");
  CHECK(big_height(cover_ideal(c5)) == 2);
  CHECK(big_height(edge_ideal(c5)) == 3);
  CHECK(big_height(ideal(vars3(), {{1, 0, 0}})) == 1);
}
