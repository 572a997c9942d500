#include <algorithm>
#include <set>

#include "cyclotome/colimit.hpp"
#include "cyclotome/cyclic_module.hpp"
#include "cyclotome/error.hpp"
#include "cyclotome/latching.hpp"
#include "cyclotome/nerve.hpp"
#include "cyclotome/subdivision.hpp"
#include "doctest.h"

using namespace cyclotome;

TEST_CASE("standard cyclic simplex levels") {
  RepresentableCyclicSet L1(1, 3);
  CHECK(L1.level_size(0) == 2);
  CHECK(L1.level_size(1) == 6);
  for (int k = 0; k <= 3; ++k) {
    for (ElementId x : L1.elements(k)) {
      ElementId y = x;
      for (int i = 0; i <= k; ++i) y = L1.cycle(k, y);
      CHECK(y == x);
    }
  }
}

TEST_CASE("cyclic nerve operators on a concrete loop") {
  CyclicNerve X(FiniteMonoid::cyclic(3), 4);
  const ElementId x = X.encode({1, 2, 2});  // (g, g^2, g^2)
  CHECK(X.decode(1, X.face(2, 0, x)) == std::vector<int>{0, 2});
  CHECK(X.decode(1, X.face(2, 1, x)) == std::vector<int>{1, 1});
  CHECK(X.decode(1, X.face(2, 2, x)) == std::vector<int>{0, 2});
  CHECK(X.decode(2, X.cycle(2, x)) == std::vector<int>{2, 1, 2});
  CHECK(X.decode(3, X.degeneracy(2, 0, x)) == std::vector<int>{1, 0, 2, 2});
  CHECK(X.cycle_inverse(2, X.cycle(2, x)) == x);
}

TEST_CASE("the function-model action agrees with generator words on nerves") {
  CyclicNerve X(FiniteMonoid::symmetric3(), 4);
  for (int k = 0; k <= 2; ++k) {
    for (int n = 0; n <= 2; ++n) {
      for (const auto& f : enumerate_lambda(k, n)) {
        for (ElementId x : X.elements(n)) CHECK(X.act_direct(f, x) == act(X, f, x));
      }
    }
  }
}

TEST_CASE("nerve of a category uses only composable loops") {
  auto C = FiniteCategory::discrete(2);
  CyclicNerve X(C, 3);
  CHECK(X.level_size(0) == 2);
  CHECK(X.level_size(2) == 2);
  CHECK_FALSE(X.is_loop({0, 1}));
}

TEST_CASE("monoid validation") {
  FiniteMonoid M = FiniteMonoid::cyclic(2);
  M.table[1][1] = 1;  // g*g = g, still a monoid
  CHECK_NOTHROW(M.validate());
  M.table[0][1] = 0;  // breaks the unit law
  CHECK_THROWS_AS(M.validate(), InputError);
}

TEST_CASE("colimit presentations") {
  ColimitCyclicSet P(CyclicPresentation::point(), 4);
  for (int k = 0; k <= 4; ++k) CHECK(P.level_size(k) == 1);
  ColimitCyclicSet L(CyclicPresentation::representable(1), 3);
  RepresentableCyclicSet R(1, 3);
  for (int k = 0; k <= 3; ++k) CHECK(L.level_size(k) == R.level_size(k));
}

TEST_CASE("random colimits are cyclic sets") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 8; ++trial) {
    ColimitCyclicSet X(CyclicPresentation::random(rng), 3);
    const CyclicModule M = linearize(X, Ring::rationals(), 3);
    CHECK(M.check_identities().pass);
  }
}

TEST_CASE("latching data of Lambda[0] at level 1") {
  RepresentableCyclicSet L0(0, 3);
  const LatchingData D = latching(L0, 1);
  CHECK(D.simplicial.size() == 1);
  CHECK(D.cyclic.size() == 2);
  CHECK(D.x_minus_one.empty());
  CHECK(check_latching(L0, 1).pass);
}

TEST_CASE("X_{-1} of a point") {
  PointCyclicSet pt(2);
  CHECK(x_minus_one(pt).size() == 1);
}

TEST_CASE("rounding down") {
  // S = {1, 3} in [3]: 0 -> -1, 1 -> 0, 2 -> 0, 3 -> 1
  const LambdaMor f = rounding_down(3, 0b1010);
  CHECK(f.eval(0) == -1);
  CHECK(f.eval(1) == 0);
  CHECK(f.eval(2) == 0);
  CHECK(f.eval(3) == 1);
}

TEST_CASE("edgewise subdivision shares ids with the base") {
  auto X = std::make_shared<CyclicNerve>(FiniteMonoid::cyclic(2), 8);
  Subdivision S(X, 2, 2);
  CHECK(S.source_level(1) == 3);
  CHECK(S.elements(1) == X->elements(3));
  CHECK(check_subdivision_group_action(S, 2).pass);
}

TEST_CASE("fixed points of a nerve are the repeated loops") {
  auto X = std::make_shared<CyclicNerve>(FiniteMonoid::cyclic(3), 12);
  FixedPointCyclicSet F(X, 3, 2);
  for (int k = 0; k <= 2; ++k) {
    std::vector<ElementId> repeats;
    for (ElementId x : X->elements(k)) repeats.push_back(X->repeat(k, x, 3));
    std::sort(repeats.begin(), repeats.end());
    CHECK(F.elements(k) == repeats);
  }
  CHECK(check_fixed_point_action(F, 2).pass);
}

TEST_CASE("fixed points of the point are the point") {
  auto X = std::make_shared<PointCyclicSet>(10);
  FixedPointCyclicSet F(X, 3, 2);
  for (int k = 0; k <= 2; ++k) CHECK(F.level_size(k) == 1);
}

TEST_CASE("gamma and its compatibility on C_2") {
  auto X = std::make_shared<CyclicNerve>(FiniteMonoid::cyclic(2), 20);
  CHECK(check_gamma(X, 2, 3).pass);
  CHECK(check_cyclotomic_compatibility(X, 2, 2, 2).pass);
}

TEST_CASE("materialized copies agree with the lazy object") {
  CyclicNerve X(FiniteMonoid::cyclic(2), 3);
  auto T = materialize(X, 3);
  CHECK(same_module(linearize(*T, Ring::rationals(), 3), linearize(X, Ring::rationals(), 3)));
  CHECK_THROWS_AS(T->require_level(4), GeneratorExhausted);
}

TEST_CASE("linearization over F_p") {
  RepresentableCyclicSet L(1, 2);
  const CyclicModule M = linearize(L, Ring::prime_field(5), 2);
  CHECK(M.ranks == std::vector<std::size_t>{2, 6, 12});
  CHECK(M.check_identities().pass);
}
