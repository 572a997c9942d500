#include <random>

#include "cyclotome/chain_complex.hpp"
#include "cyclotome/cyclic_module.hpp"
#include "cyclotome/error.hpp"
#include "cyclotome/kernels.hpp"
#include "cyclotome/nerve.hpp"
#include "cyclotome/smith.hpp"
#include "doctest.h"

using namespace cyclotome;

namespace {

SparseMatrix random_sparse(std::mt19937_64& rng, std::size_t rows, std::size_t cols, double density, int range) {
  SparseMatrix M(rows, cols);
  std::uniform_real_distribution<double> coin(0, 1);
  std::uniform_int_distribution<int> val(-range, range);
  for (std::size_t c = 0; c < cols; ++c) {
    for (std::size_t r = 0; r < rows; ++r) {
      if (coin(rng) < density) M.add(r, c, val(rng));
    }
  }
  return M;
}

// Z in degrees 0 and 1 with d_1 = (k).
ChainComplex multiplication_by(int k) {
  ChainComplex C;
  C.ring = Ring::integers();
  C.ranks = {1, 1};
  C.d.emplace_back(0, 1);
  SparseMatrix d(1, 1);
  d.add(0, 0, k);
  C.d.push_back(d);
  C.complete = true;
  C.valid_through = 1;
  return C;
}

}  // namespace

TEST_CASE("Smith normal form of a small matrix") {
  ZMatrix M(2, 2);
  M(0, 0) = 2;
  M(0, 1) = 4;
  M(1, 0) = 6;
  M(1, 1) = 8;
  const SmithResult S = smith_normal_form(M);
  CHECK(S.diagonal.size() == 2);
  CHECK(S.diagonal[0] == 2);
  CHECK(S.diagonal[1] == 4);
  std::string why;
  CHECK_MESSAGE(certify_smith(M, S, &why), why);
  CHECK(S.U * M * S.V == S.D);
}

TEST_CASE("a tampered certificate is rejected") {
  ZMatrix M(2, 2);
  M(0, 0) = 3;
  M(1, 1) = 5;
  SmithResult S = smith_normal_form(M);
  CHECK(certify_smith(M, S));
  S.D(0, 0) += 1;
  CHECK_FALSE(certify_smith(M, S));
}

TEST_CASE("invariant factors of random integer matrices agree with the dense algorithm") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const SparseMatrix M = random_sparse(rng, 7, 9, 0.35, 4);
    const auto dense = smith_normal_form(to_integer(M), false).diagonal;
    CHECK(invariant_factors(M) == dense);
  }
}

TEST_CASE("serial and parallel rank kernels agree") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const SparseMatrix M = random_sparse(rng, 40, 60, 0.08, 3);
    for (const Ring& R : {Ring::rationals(), Ring::prime_field(2), Ring::prime_field(7)}) {
      CHECK(rank_serial(M, R) == rank_parallel(M, R, 8));
    }
  }
}

TEST_CASE("torsion over Z and its shadow over F_p") {
  const ChainComplex C = multiplication_by(2);
  const HomologyTable H = homology(C);
  REQUIRE(H.groups.size() == 2);
  CHECK(H.groups[0].rank == 0);
  CHECK(H.groups[0].torsion == std::vector<std::string>{"2"});
  CHECK(H.groups[1].rank == 0);

  ChainComplex C2 = C;
  C2.ring = Ring::prime_field(2);
  CHECK(homology(C2).ranks() == std::vector<std::size_t>{1, 1});
  ChainComplex C3 = C;
  C3.ring = Ring::prime_field(3);
  CHECK(homology(C3).ranks() == std::vector<std::size_t>{0, 0});
}

TEST_CASE("homology outside the validity window is refused") {
  CyclicNerve X(FiniteMonoid::cyclic(2), 3);
  const ChainComplex C = normalized_chains(X, Ring::rationals(), 3);
  CHECK(C.valid_through == 2);
  CHECK_THROWS_AS(homology(C, 3), RangeError);
}

TEST_CASE("the point has the homology of a point") {
  PointCyclicSet pt(4);
  const ChainComplex C = normalized_chains(pt, Ring::integers(), 4, true, 0);
  CHECK(C.complete);
  CHECK(homology(C).ranks() == std::vector<std::size_t>{1, 0, 0, 0, 0});
  const auto chi = euler_characteristic(C);
  CHECK(chi.certain);
  CHECK(chi.value == 1);
}

TEST_CASE("normalized and Moore complexes have the same homology") {
  CyclicNerve X(FiniteMonoid::symmetric3(), 4);
  const auto normalized = homology(normalized_chains(X, Ring::rationals(), 4)).ranks();
  const auto moore = homology(moore_complex(linearize(X, Ring::rationals(), 4))).ranks();
  CHECK(normalized == moore);
  CHECK(normalized.front() == 3);  // conjugacy classes of S_3
}

TEST_CASE("d squared vanishes") {
  RepresentableCyclicSet L(2, 4);
  CHECK(normalized_chains(L, Ring::integers(), 4, false).check_d_squared().pass);
}

TEST_CASE("linear duals") {
  CyclicNerve X(FiniteMonoid::cyclic(2), 4);
  const ChainComplex C = normalized_chains(X, Ring::rationals(), 4);
  auto co = cohomology_ranks(dual_complex(C));
  const auto h = homology(C).ranks();
  co.resize(h.size());
  CHECK(co == h);
  CHECK_THROWS_AS(dual_complex(multiplication_by(3)), InputError);
}
