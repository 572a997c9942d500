#include <set>

#include "cyclotome/error.hpp"
#include "cyclotome/lambda.hpp"
#include "doctest.h"

using namespace cyclotome;

namespace {

// Brute-force count of monotone maps [m] -> [n].
std::size_t monotone_count(int m, int n) {
  std::size_t count = 0;
  std::vector<int> v(static_cast<std::size_t>(m) + 1, 0);
  while (true) {
    ++count;
    int i = m;
    while (i >= 0 && v[static_cast<std::size_t>(i)] == n) --i;
    if (i < 0) break;
    const int x = v[static_cast<std::size_t>(i)] + 1;
    for (int j = i; j <= m; ++j) v[static_cast<std::size_t>(j)] = x;
  }
  return count;
}

// Periodic extension of F(0..m) with F(m+1) = F(0) + n + 1.
std::int64_t periodic(const std::vector<std::int64_t>& s, int m, int n, std::int64_t x) {
  const std::int64_t q = floor_div(x, m + 1);
  return s[static_cast<std::size_t>(x - q * (m + 1))] + q * (n + 1);
}

}  // namespace

TEST_CASE("floor division rounds toward minus infinity") {
  CHECK(floor_div(-1, 3) == -1);
  CHECK(floor_div(-3, 3) == -1);
  CHECK(floor_div(5, 3) == 1);
  CHECK(floor_mod(-1, 3) == 2);
}

TEST_CASE("Delta hom-sets match a brute-force count") {
  for (int m = 0; m <= 4; ++m) {
    for (int n = 0; n <= 4; ++n) {
      CHECK(enumerate_delta(m, n).size() == monotone_count(m, n));
      CHECK(count_delta(m, n) == monotone_count(m, n));
    }
  }
}

TEST_CASE("Lambda([k],[0]) has k+1 points") {
  for (int k = 0; k <= 8; ++k) CHECK(enumerate_lambda(k, 0).size() == static_cast<std::size_t>(k) + 1);
}

TEST_CASE("cycle maps") {
  const LambdaMor t = LambdaMor::cycle(3);
  CHECK(t.eval(0) == -1);
  CHECK(t.eval(4) == 3);
  CHECK(LambdaMor::cycle_power(3, 4) == LambdaMor::identity(3));
  CHECK(LambdaMor::cycle_power(3, -1) == LambdaMor::cycle_power(3, 3));
  LambdaMor p = LambdaMor::identity(3);
  for (int i = 0; i < 4; ++i) p = compose(t, p);
  CHECK(p == LambdaMor::identity(3));
}

TEST_CASE("normal form rejects bad samples") {
  const std::vector<std::int64_t> decreasing{0, -1, 2};
  CHECK_THROWS_AS(normal_form(1, 1, decreasing), InputError);
  const std::vector<std::int64_t> wrong_period{0, 1, 3};
  CHECK_THROWS_AS(normal_form(1, 1, wrong_period), InputError);
  const std::vector<std::int64_t> shifted{2, 3, 4};
  CHECK(normal_form(1, 1, shifted) == LambdaMor::identity(1));
}

TEST_CASE("composition agrees with composing the periodic functions") {
  for (int m = 0; m <= 2; ++m) {
    for (int n = 0; n <= 2; ++n) {
      for (int p = 0; p <= 2; ++p) {
        for (const auto& f : enumerate_lambda(m, n)) {
          for (const auto& g : enumerate_lambda(n, p)) {
            const auto fs = f.samples(), gs = g.samples();
            const LambdaMor h = compose(g, f);
            for (int x = -3; x <= 6; ++x) {
              const auto want = periodic(gs, n, p, periodic(fs, m, n, x));
              // equal up to a multiple of p + 1, uniformly in x
              CHECK(floor_mod(h.eval(x) - want, p + 1) == 0);
            }
            CHECK(h.eval(1) - h.eval(0) ==
                  periodic(gs, n, p, periodic(fs, m, n, 1)) - periodic(gs, n, p, periodic(fs, m, n, 0)));
          }
        }
      }
    }
  }
}

TEST_CASE("vertex maps") {
  CHECK(LambdaMor::cycle(2).vertex_map() == std::vector<int>{2, 0, 1});
  CHECK(LambdaMor::identity(1).vertex_map() == std::vector<int>{0, 1});
}

TEST_CASE("generator words evaluate back to the morphism") {
  std::mt19937_64 rng(7);
  for (const auto& f : enumerate_lambda(3, 2)) {
    CHECK(evaluate(to_generator_word(f)) == f);
    CHECK(evaluate(alternate_generator_word(f, rng)) == f);
  }
  GeneratorWord w;
  w.source = 1;
  w.target = 1;
  w.atoms = {Generator::cycle(1), Generator::cycle_inverse(1)};
  CHECK(evaluate(w) == LambdaMor::identity(1));
}

TEST_CASE("extra codegeneracy collapses the closing arrow") {
  // its action is t^{-1} s_0, so as a morphism it is s^0 o tau_{n+1}^{-1}
  for (int n = 0; n <= 3; ++n) {
    const LambdaMor want = compose(LambdaMor::codegeneracy(n, 0), LambdaMor::cycle_power(n + 1, -1));
    CHECK(LambdaMor::extra_codegeneracy(n) == want);
    const LambdaMor s = LambdaMor::extra_codegeneracy(n);
    CHECK(s.eval(-1) == s.eval(0));
  }
}

TEST_CASE("r-cyclic hom-sets are r times larger") {
  for (int r = 1; r <= 3; ++r) {
    for (int m = 0; m <= 2; ++m) {
      for (int n = 0; n <= 2; ++n) {
        const auto R = enumerate_rcyclic(r, m, n);
        CHECK(R.size() == static_cast<std::size_t>(r) * enumerate_lambda(m, n).size());
        CHECK(std::set<RCyclicMor>(R.begin(), R.end()).size() == R.size());
      }
    }
  }
}

TEST_CASE("lifts to Lambda_r") {
  const LambdaMor g = LambdaMor::cycle(2);
  for (int r = 1; r <= 3; ++r) {
    std::set<RCyclicMor> sheets;
    for (int k = 0; k < r; ++k) {
      const RCyclicMor f = lift_to_rcyclic(g, r, k);
      CHECK(quotient_p_r(f) == g);
      sheets.insert(f);
    }
    CHECK(sheets.size() == static_cast<std::size_t>(r));
  }
}

TEST_CASE("the C_r generator has order r") {
  for (int r = 1; r <= 4; ++r) {
    for (int k = 0; k <= 2; ++k) {
      const RCyclicMor g = rcyclic_group_generator(r, k);
      RCyclicMor p = RCyclicMor::identity(r, k);
      for (int i = 0; i < r; ++i) {
        if (i > 0) CHECK(p != RCyclicMor::identity(r, k));
        p = compose(g, p);
      }
      CHECK(p == RCyclicMor::identity(r, k));
      CHECK(quotient_p_r(g) == LambdaMor::identity(k));
    }
  }
}

TEST_CASE("edgewise subdivision of Delta morphisms") {
  const DeltaMor d = DeltaMor::coface(1, 0);  // [0] -> [1], 0 |-> 1
  const DeltaMor s2 = sd_on_morphism(2, d);   // [1] -> [3]
  CHECK(s2.values == std::vector<int>{1, 3});
  CHECK(sd_on_morphism(3, DeltaMor::identity(1)) == DeltaMor::identity(5));
}

TEST_CASE("enumeration caps") {
  CHECK_THROWS_AS(enumerate_lambda(5, 5, 10), ResourceLimitError);
  CHECK_THROWS_AS(enumerate_delta(6, 6, 10), ResourceLimitError);
}

TEST_CASE("as_lambda_morphism unrolls the r sheets") {
  const RCyclicMor f = RCyclicMor::identity(2, 1);
  const LambdaMor g = as_lambda_morphism(f);
  CHECK(g.source == 3);
  CHECK(g.target == 3);
  CHECK(g == LambdaMor::identity(3));
}
