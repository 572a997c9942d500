#include "cyclotome/error.hpp"
#include "cyclotome/hochschild.hpp"
#include "cyclotome/hodge.hpp"
#include "cyclotome/nerve.hpp"
#include "doctest.h"

using namespace cyclotome;

namespace {

std::vector<std::size_t> by_total(const HHTable& T, int top) {
  std::vector<std::size_t> out;
  for (int d = 0; d <= top; ++d) {
    const auto it = T.by_total.find(d);
    out.push_back(it == T.by_total.end() ? 0 : it->second);
  }
  return out;
}

std::vector<std::size_t> by_simplicial(const HHTable& T, int top) {
  std::vector<std::size_t> out;
  for (int s = 0; s <= top; ++s) {
    const auto it = T.by_simplicial.find(s);
    out.push_back(it == T.by_simplicial.end() ? 0 : it->second);
  }
  return out;
}

// Rational Betti numbers of the free loop space of S^m, from the minimal
// Sullivan model (x, dx = 0 or x^2) tensored with its desuspension.
std::vector<std::size_t> free_loop_betti(int m, int top) {
  std::vector<std::size_t> b(static_cast<std::size_t>(top) + 1, 0);
  b[0] = 1;
  if (m % 2 == 1) {
    // Lambda(x_m) (x) Q[y_{m-1}]
    for (int k = 0; (m - 1) * k <= top; ++k) {
      b[static_cast<std::size_t>((m - 1) * k)] = 1;
      if ((m - 1) * k + m <= top) b[static_cast<std::size_t>((m - 1) * k + m)] = 1;
    }
  } else {
    // classes x y^k in degree m + k(2m-2) and xbar y^k in degree m-1 + k(2m-2)
    for (int k = 0; m - 1 + k * (2 * m - 2) <= top; ++k) {
      b[static_cast<std::size_t>(m - 1 + k * (2 * m - 2))] += 1;
      if (m + k * (2 * m - 2) <= top) b[static_cast<std::size_t>(m + k * (2 * m - 2))] += 1;
    }
  }
  return b;
}

}  // namespace

TEST_CASE("HH of the ground field") {
  const auto A = GradedAlgebra::ground_field(Ring::rationals());
  CHECK(by_simplicial(hh_simplicial(A, 4), 4) == std::vector<std::size_t>{1, 0, 0, 0, 0});
  CHECK(by_simplicial(hh_simplicial(A, 4, false), 4) == std::vector<std::size_t>{1, 0, 0, 0, 0});
}

TEST_CASE("HH of group algebras from centralizer homology") {
  // HH_n(k[G]) is the sum over conjugacy classes of H_n(centralizer; k).
  const auto QC2 = GradedAlgebra::monoid_algebra(FiniteMonoid::cyclic(2), Ring::rationals());
  CHECK(by_simplicial(hh_simplicial(QC2, 3), 3) == std::vector<std::size_t>{2, 0, 0, 0});

  const auto F2C2 = GradedAlgebra::monoid_algebra(FiniteMonoid::cyclic(2), Ring::prime_field(2));
  CHECK(by_simplicial(hh_simplicial(F2C2, 3), 3) == std::vector<std::size_t>{2, 2, 2, 2});

  // S_3 over F_3: centralizers S_3, C_2, C_3; H_n(S_3; F_3) is F_3 for n = 0, 3, 4 mod 4
  const auto F3S3 = GradedAlgebra::monoid_algebra(FiniteMonoid::symmetric3(), Ring::prime_field(3));
  CHECK(by_simplicial(hh_simplicial(F3S3, 4), 4) == std::vector<std::size_t>{3, 1, 1, 2, 2});
}

TEST_CASE("normalized and un-normalized complexes agree") {
  const auto A = GradedAlgebra::monoid_algebra(FiniteMonoid::cyclic(3), Ring::prime_field(3));
  CHECK(by_simplicial(hh_simplicial(A, 3, true), 3) == by_simplicial(hh_simplicial(A, 3, false), 3));
  const auto X = GradedAlgebra::exterior(3);
  CHECK(by_total(hh_total(X, 6, true), 6) == by_total(hh_total(X, 6, false), 6));
}

TEST_CASE("operator identities") {
  for (const bool normalized : {true, false}) {
    HochschildComplex H(GradedAlgebra::exterior(3), 4, normalized);
    CHECK(H.check_identities().pass);
    HochschildComplex K(GradedAlgebra::monoid_algebra(FiniteMonoid::symmetric3(), Ring::rationals()), 3, normalized);
    CHECK(K.check_identities().pass);
  }
}

TEST_CASE("the cyclic bar construction of k[M] is the linearized nerve") {
  const FiniteMonoid M = FiniteMonoid::symmetric3();
  HochschildComplex H(GradedAlgebra::monoid_algebra(M, Ring::rationals()), 3, false);
  CyclicNerve X(M, 3);
  CHECK(same_module(H.unsigned_cyclic_module(), linearize(X, Ring::rationals(), 3)));
}

TEST_CASE("spheres match the free loop space") {
  for (const int m : {3, 5}) {
    const auto A = GradedAlgebra::sphere_model((m - 1) / 2, true);
    CHECK(by_total(hh_total(A, 12), 12) == free_loop_betti(m, 12));
  }
  for (const int m : {2, 4}) {
    const auto A = GradedAlgebra::sphere_model(m / 2, false);
    CHECK(by_total(hh_total(A, 12), 12) == free_loop_betti(m, 12));
  }
}

TEST_CASE("total degrees need the connectivity gap") {
  CHECK_THROWS_AS(hh_total(GradedAlgebra::exterior(1), 3), InputError);
}

TEST_CASE("cyclic homology") {
  const auto k = GradedAlgebra::ground_field(Ring::rationals());
  CHECK(hc(k, 5) == std::vector<std::size_t>{1, 0, 1, 0, 1, 0});
  const auto QC2 = GradedAlgebra::monoid_algebra(FiniteMonoid::cyclic(2), Ring::rationals());
  CHECK(hc(QC2, 4) == std::vector<std::size_t>{2, 0, 2, 0, 2});
}

TEST_CASE("Hodge idempotents") {
  HochschildComplex H(GradedAlgebra::exterior(3), 5, false);
  HodgeData E(H, 4);
  CHECK(E.check_contract().pass);
  const AdamsReport R = adams_report(E, {2, 3});
  CHECK(R.ok);
  CHECK(R.multiplicative.pass);
  for (const auto& c : R.classes) {
    std::size_t sum = 0;
    for (auto p : c.pieces) sum += p;
    CHECK(sum == c.rank);
  }
}

TEST_CASE("Hodge input checks") {
  HochschildComplex H(GradedAlgebra::monoid_algebra(FiniteMonoid::symmetric3(), Ring::rationals()), 2, false);
  CHECK_THROWS_AS(HodgeData(H, 2), InputError);
  HochschildComplex F(GradedAlgebra::square_zero(2, Ring::prime_field(3)), 2, false);
  CHECK_THROWS_AS(HodgeData(F, 2), InputError);
}

TEST_CASE("the cell cap stops large complexes") {
  const auto A = GradedAlgebra::monoid_algebra(FiniteMonoid::symmetric3(), Ring::rationals());
  CHECK_THROWS_AS(hh_simplicial(A, 6, false, 1000), ResourceLimitError);
}
