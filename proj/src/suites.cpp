#include "cyclotome/suites.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>

#include "cyclotome/chain_complex.hpp"
#include "cyclotome/colimit.hpp"
#include "cyclotome/cyclic_module.hpp"
#include "cyclotome/error.hpp"
#include "cyclotome/hochschild.hpp"
#include "cyclotome/hodge.hpp"
#include "cyclotome/lambda.hpp"
#include "cyclotome/latching.hpp"
#include "cyclotome/nerve.hpp"
#include "cyclotome/subdivision.hpp"

namespace cyclotome {

bool SuiteReport::pass() const {
  return std::none_of(checks.begin(), checks.end(), [](const SuiteCheck& c) { return c.status == "fail"; });
}

Json SuiteReport::rows() const {
  Json out = Json::array();
  for (const auto& c : checks) {
    out.push_back({{"id", c.id}, {"anchor", c.anchor}, {"status", c.status}, {"evidence", c.evidence}});
  }
  return out;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"lambda",     "latching", "subdivision",
                                              "cyclotomic", "hochschild", "duality"};
  return names;
}

namespace {

class Suite {
 public:
  Suite(std::string name, std::uint64_t seed) {
    report_.suite = std::move(name);
    report_.seed = seed;
  }

  // Runs one check; an exception is a failure with the message as evidence.
  void run(const std::string& id, const std::string& anchor, const std::function<CheckResult()>& body) {
    SuiteCheck c{id, anchor, "pass", Json::object()};
    try {
      CheckResult r = body();
      c.status = r.pass ? "pass" : "fail";
      c.evidence = r.evidence;
    } catch (const std::exception& e) {
      c.status = "fail";
      c.evidence["error"] = e.what();
    }
    report_.checks.push_back(std::move(c));
  }

  SuiteReport take() { return std::move(report_); }

 private:
  SuiteReport report_;
};

std::string lvl(int m, int n) { return "(" + std::to_string(m) + "," + std::to_string(n) + ")"; }

// Composition through the function model, independent of compose().
LambdaMor compose_by_functions(const LambdaMor& g, const LambdaMor& f) {
  std::vector<std::int64_t> samples;
  for (int x = 0; x <= f.source + 1; ++x) samples.push_back(g.eval(f.eval(x)));
  return normal_form(f.source, g.target, samples);
}

// --- lambda -----------------------------------------------------------------------

void lambda_suite(Suite& S, std::uint64_t seed) {
  S.run("lambda.points", "Lambda([k],[0]) has exactly k+1 elements", [] {
    CheckResult r;
    Json counts = Json::array();
    for (int k = 0; k <= 8; ++k) {
      const auto all = enumerate_lambda(k, 0);
      counts.push_back(all.size());
      r.expect(all.size() == static_cast<std::size_t>(k) + 1, "wrong count at k=" + std::to_string(k));
    }
    r.evidence["counts_k0_to_k8"] = counts;
    return r;
  });

  S.run("lambda.cardinality", "|Lambda([m],[n])| = (m+1)|Delta([m],[n])| and every morphism has degree 1", [] {
    CheckResult r;
    std::size_t total = 0;
    for (int m = 0; m <= 5; ++m) {
      for (int n = 0; n <= 5; ++n) {
        const auto L = enumerate_lambda(m, n);
        const auto D = enumerate_delta(m, n);
        total += L.size();
        r.expect(L.size() == static_cast<std::size_t>(m + 1) * D.size(), "count mismatch at " + lvl(m, n));
        r.expect(L.size() == count_lambda(m, n), "closed-form count mismatch at " + lvl(m, n));
        for (const auto& f : L) {
          for (int x = -m - 1; x <= m + 1; ++x) {
            if (f.eval(x + m + 1) != f.eval(x) + n + 1) r.fail("degree-1 law fails for " + to_string(f));
            if (f.eval(x + 1) < f.eval(x)) r.fail("not monotone: " + to_string(f));
          }
        }
      }
    }
    r.evidence["morphisms_checked"] = total;
    return r;
  });

  S.run("lambda.factorization", "(phi, j) -> phi o tau^j is a bijection Delta([m],[n]) x Z/(m+1) -> Lambda([m],[n])",
        [] {
          CheckResult r;
          for (int m = 0; m <= 4; ++m) {
            for (int n = 0; n <= 4; ++n) {
              std::set<LambdaMor> image;
              std::size_t pairs = 0;
              for (const auto& phi : enumerate_delta(m, n)) {
                for (int j = 0; j <= m; ++j) {
                  image.insert(compose_by_functions(LambdaMor::from_delta(phi), LambdaMor::cycle_power(m, j)));
                  ++pairs;
                }
              }
              const auto all = enumerate_lambda(m, n);
              r.expect(image.size() == pairs, "two pairs give the same morphism at " + lvl(m, n));
              r.expect(std::set<LambdaMor>(all.begin(), all.end()) == image, "not onto at " + lvl(m, n));
            }
          }
          r.evidence["levels"] = "m, n <= 4";
          return r;
        });

  S.run("lambda.composition", "normal-form composition equals composition of the Z -> Z functions", [] {
    CheckResult r;
    std::size_t pairs = 0;
    for (int m = 0; m <= 3; ++m) {
      for (int n = 0; n <= 3; ++n) {
        const auto F = enumerate_lambda(m, n);
        for (int p = 0; p <= 3; ++p) {
          for (const auto& g : enumerate_lambda(n, p)) {
            for (const auto& f : F) {
              ++pairs;
              if (compose(g, f) != compose_by_functions(g, f)) r.fail(to_string(g) + " o " + to_string(f));
            }
          }
        }
      }
    }
    r.evidence["pairs"] = pairs;
    return r;
  });

  S.run("lambda.set_map", "a morphism with non-constant vertex map is determined by that map", [] {
    CheckResult r;
    for (int m = 0; m <= 4; ++m) {
      for (int n = 0; n <= 4; ++n) {
        std::map<std::vector<int>, int> seen;
        for (const auto& f : enumerate_lambda(m, n)) {
          const auto v = f.vertex_map();
          if (std::adjacent_find(v.begin(), v.end(), std::not_equal_to<>()) == v.end()) continue;
          if (++seen[v] > 1) r.fail("two morphisms share a vertex map at " + lvl(m, n));
        }
      }
    }
    return r;
  });

  S.run("lambda.generators", "Lambda is generated by cofaces, codegeneracies and the cycle maps", [seed] {
    CheckResult r;
    std::mt19937_64 rng(seed);
    std::size_t words = 0;
    for (int m = 0; m <= 4; ++m) {
      for (int n = 0; n <= 4; ++n) {
        for (const auto& f : enumerate_lambda(m, n)) {
          const auto w = to_generator_word(f);
          ++words;
          r.expect(evaluate(w) == f, "canonical word fails for " + to_string(f));
          r.expect(w.atoms.size() <= static_cast<std::size_t>(m + n + 2 * (m + 1)), "word too long for " + to_string(f));
          r.expect(evaluate(alternate_generator_word(f, rng)) == f, "alternate word fails for " + to_string(f));
        }
      }
    }
    r.evidence["words"] = words;
    return r;
  });

  S.run("lambda.cyclic_identities", "tau^{n+1} = 1, tau d^i = d^{i-1} tau, tau d^0 = d^n, tau s^i = s^{i-1} tau", [] {
    CheckResult r;
    for (int n = 0; n <= 6; ++n) {
      LambdaMor p = LambdaMor::identity(n);
      for (int k = 0; k <= n; ++k) p = compose_by_functions(LambdaMor::cycle(n), p);
      r.expect(p == LambdaMor::identity(n), "tau^{n+1} != 1 on [" + std::to_string(n) + "]");
      for (int i = 1; n >= 1 && i <= n; ++i) {
        r.expect(compose_by_functions(LambdaMor::cycle(n), LambdaMor::coface(n, i)) ==
                     compose_by_functions(LambdaMor::coface(n, i - 1), LambdaMor::cycle(n - 1)),
                 "tau d^i at n=" + std::to_string(n) + ", i=" + std::to_string(i));
      }
      if (n >= 1) {
        r.expect(compose_by_functions(LambdaMor::cycle(n), LambdaMor::coface(n, 0)) == LambdaMor::coface(n, n),
                 "tau d^0 at n=" + std::to_string(n));
      }
      for (int i = 1; i <= n; ++i) {
        r.expect(compose_by_functions(LambdaMor::cycle(n), LambdaMor::codegeneracy(n, i)) ==
                     compose_by_functions(LambdaMor::codegeneracy(n, i - 1), LambdaMor::cycle(n + 1)),
                 "tau s^i at n=" + std::to_string(n) + ", i=" + std::to_string(i));
      }
    }
    return r;
  });

  S.run("lambda.subdivision_functor", "sd_r is a functor on Delta and sd_1 is the identity", [] {
    CheckResult r;
    for (int m = 0; m <= 4; ++m) {
      for (int n = 0; n <= 4; ++n) {
        for (const auto& f : enumerate_delta(m, n)) r.expect(sd_on_morphism(1, f) == f, "sd_1 moves " + to_string(f));
      }
    }
    r.expect(sd_on_morphism(2, DeltaMor::identity(0)) == DeltaMor::identity(1), "sd_2(id_[0]) != id_[1]");
    for (int rr = 1; rr <= 3; ++rr) {
      for (int m = 0; m <= 2; ++m) {
        for (int n = 0; n <= 2; ++n) {
          for (int p = 0; p <= 2; ++p) {
            for (const auto& f : enumerate_delta(m, n)) {
              for (const auto& g : enumerate_delta(n, p)) {
                r.expect(sd_on_morphism(rr, compose(g, f)) == compose(sd_on_morphism(rr, g), sd_on_morphism(rr, f)),
                         "sd_" + std::to_string(rr) + " not functorial on " + to_string(g) + " o " + to_string(f));
              }
            }
          }
        }
      }
    }
    return r;
  });

  S.run("lambda.quotient", "P_r is a surjective functor with fibers of size r, and P_1 is the identity", [] {
    CheckResult r;
    for (int rr = 1; rr <= 3; ++rr) {
      for (int m = 0; m <= 2; ++m) {
        for (int n = 0; n <= 2; ++n) {
          std::map<LambdaMor, int> fiber;
          const auto R = enumerate_rcyclic(rr, m, n);
          r.expect(R.size() == count_rcyclic(rr, m, n), "closed-form count mismatch");
          for (const auto& f : R) ++fiber[quotient_p_r(f)];
          const auto L = enumerate_lambda(m, n);
          r.expect(fiber.size() == L.size(), "P_" + std::to_string(rr) + " not onto at " + lvl(m, n));
          for (const auto& [g, k] : fiber) r.expect(k == rr, "fiber of size " + std::to_string(k) + " over " + to_string(g));
          for (int p = 0; p <= 2; ++p) {
            for (const auto& g : enumerate_rcyclic(rr, n, p)) {
              for (const auto& f : R) {
                r.expect(quotient_p_r(compose(g, f)) == compose(quotient_p_r(g), quotient_p_r(f)),
                         "P_r not functorial on " + to_string(g) + " o " + to_string(f));
              }
            }
          }
        }
        r.expect(quotient_p_r(RCyclicMor::identity(rr, m)) == LambdaMor::identity(m), "P_r(id) != id");
      }
    }
    for (int m = 0; m <= 3; ++m) {
      for (int n = 0; n <= 3; ++n) {
        for (const auto& f : enumerate_lambda(m, n)) {
          r.expect(quotient_p_r(lift_to_rcyclic(f, 1)) == f, "P_1 moves " + to_string(f));
        }
      }
    }
    return r;
  });
}

// --- latching and cyclic objects ------------------------------------------------------

struct Example {
  std::string name;
  std::shared_ptr<const CyclicSet> X;
  int nondegenerate_bound = -1;  // -1: unknown
};

std::vector<Example> fuzz_sets(std::uint64_t seed, int count, int truncation) {
  std::mt19937_64 rng(seed);
  std::vector<Example> out;
  for (int i = 0; i < count; ++i) {
    auto P = CyclicPresentation::random(rng, 4, 2, 5);
    auto X = std::make_shared<ColimitCyclicSet>(P, truncation);
    out.push_back({"fuzz" + std::to_string(i), X, X->top_nondegenerate_bound()});
  }
  return out;
}

std::vector<Example> named_sets(int truncation) {
  std::vector<Example> out;
  out.push_back({"point", std::make_shared<PointCyclicSet>(truncation), 0});
  for (int n = 0; n <= 2; ++n) {
    out.push_back({"Lambda[" + std::to_string(n) + "]", std::make_shared<RepresentableCyclicSet>(n, truncation), n + 1});
  }
  out.push_back({"Ncyc(C2)", std::make_shared<CyclicNerve>(FiniteMonoid::cyclic(2), truncation), -1});
  out.push_back({"Ncyc(S3)", std::make_shared<CyclicNerve>(FiniteMonoid::symmetric3(), truncation), -1});
  out.push_back({"Ncyc(2 objects)", std::make_shared<CyclicNerve>(FiniteCategory::discrete(2), truncation), -1});
  return out;
}

void latching_suite(Suite& S, std::uint64_t seed) {
  auto examples = named_sets(5);
  for (auto& e : fuzz_sets(seed, 20, 5)) examples.push_back(std::move(e));

  S.run("latching.cube", "X_S meets X_T in X_{S cap T}, the cube's colimit is L_n^cyc, and L_n^cyc is the t-closure of L_n",
        [&] {
          CheckResult r;
          Json per = Json::array();
          for (const auto& e : examples) {
            const int top = e.name.rfind("Ncyc(S3)", 0) == 0 ? 3 : 4;
            for (int n = 0; n <= top; ++n) {
              const CheckResult c = check_latching(*e.X, n);
              if (!c.pass) r.fail(e.name + " at n=" + std::to_string(n) + ": " + c.evidence.value("counterexample", ""));
            }
            per.push_back(e.name);
          }
          r.evidence["objects"] = per;
          return r;
        });

  S.run("latching.x_minus_one", "X_{-1} is the equalizer of s_0 and the extra degeneracy on X_0", [] {
    CheckResult r;
    RepresentableCyclicSet L0(0, 2);
    PointCyclicSet pt(2);
    CyclicNerve C2(FiniteMonoid::cyclic(2), 2);
    r.expect(x_minus_one(L0).empty(), "X_{-1} of Lambda[0] is not empty");
    r.expect(x_minus_one(pt).size() == 1, "X_{-1} of the point is not a point");
    std::vector<ElementId> direct;
    for (ElementId g : C2.elements(0)) {
      if (C2.degeneracy(0, 0, g) == C2.extra_degeneracy(0, g)) direct.push_back(g);
    }
    r.expect(x_minus_one(C2) == direct, "X_{-1} of Ncyc(C2) differs from the direct equalizer");
    r.evidence["Ncyc(C2)"] = direct.size();
    return r;
  });

  S.run("latching.euler", "chi(|X|) = |X_{-1}| for finite cyclic sets (a derived consequence of the latching pushout)",
        [&] {
          CheckResult r;
          Json rows = Json::array();
          for (const auto& e : examples) {
            if (e.nondegenerate_bound < 0) continue;
            const int N = std::max(e.nondegenerate_bound, 1);
            const ChainComplex C = normalized_chains(*e.X, Ring::rationals(), N, true, e.nondegenerate_bound);
            const auto chi = euler_characteristic(C);
            const auto xm = x_minus_one(*e.X).size();
            r.expect(chi.certain, e.name + ": Euler characteristic not certain");
            r.expect(chi.value == static_cast<long long>(xm), e.name + ": chi differs from |X_{-1}|");
            rows.push_back({{"object", e.name}, {"chi", chi.value}, {"x_minus_one", xm}});
          }
          r.evidence["derived"] = true;
          r.evidence["instances"] = rows;
          return r;
        });

  S.run("objects.functoriality", "the action of a Lambda-morphism does not depend on its factorization and is contravariant",
        [&, seed] {
          CheckResult r;
          std::mt19937_64 rng(seed + 1);
          std::size_t trials = 0;
          for (const auto& e : examples) {
            const int N = e.name.rfind("Ncyc(S3)", 0) == 0 ? 3 : 4;
            const int count = e.name.rfind("Ncyc(S3)", 0) == 0 ? 500 : 60;
            for (int k = 0; k < count; ++k) {
              std::uniform_int_distribution<int> level(0, N);
              const int a = level(rng), b = level(rng), c = level(rng);
              const auto F = enumerate_lambda(a, b);  // f : [a] -> [b]
              const auto G = enumerate_lambda(b, c);  // g : [b] -> [c]
              const auto xs = e.X->elements(c);
              if (xs.empty()) continue;
              const auto& f = F[std::uniform_int_distribution<std::size_t>(0, F.size() - 1)(rng)];
              const auto& g = G[std::uniform_int_distribution<std::size_t>(0, G.size() - 1)(rng)];
              const ElementId x = xs[std::uniform_int_distribution<std::size_t>(0, xs.size() - 1)(rng)];
              ++trials;
              const ElementId gx = act(*e.X, g, x);
              r.expect(act(*e.X, alternate_generator_word(g, rng), x) == gx, e.name + ": factorization dependence");
              r.expect(act(*e.X, compose(g, f), x) == act(*e.X, f, gx), e.name + ": not contravariant");
            }
          }
          r.evidence["trials"] = trials;
          return r;
        });

  S.run("objects.standard_simplex", "|Lambda[n]| is S^1 x Delta^n: rational homology ranks (1, 1, 0, ...)", [] {
    CheckResult r;
    Json rows = Json::array();
    for (int n = 0; n <= 3; ++n) {
      RepresentableCyclicSet X(n, n + 2);
      const auto ranks = homology(normalized_chains(X, Ring::rationals(), n + 2, true, n + 1), n + 1).ranks();
      std::vector<std::size_t> expected(ranks.size(), 0);
      expected[0] = 1;
      if (expected.size() > 1) expected[1] = 1;
      r.expect(ranks.size() >= 2 && ranks == expected, "n=" + std::to_string(n));
      rows.push_back({{"n", n}, {"ranks", ranks}});
    }
    r.evidence["ranks"] = rows;
    return r;
  });

  S.run("objects.cycle_order", "t_n has order dividing n+1 on every level", [&] {
    CheckResult r;
    for (const auto& e : examples) {
      for (int n = 0; n <= 3; ++n) {
        for (ElementId x : e.X->elements(n)) {
          ElementId y = x;
          for (int k = 0; k <= n; ++k) y = e.X->cycle(n, y);
          if (y != x) r.fail(e.name + ": t^{n+1} moves " + e.X->describe(n, x));
        }
      }
    }
    return r;
  });
}

// --- subdivision ----------------------------------------------------------------------

void subdivision_suite(Suite& S, std::uint64_t) {
  auto base = [](int N) {
    std::vector<Example> out;
    out.push_back({"Lambda[0]", std::make_shared<RepresentableCyclicSet>(0, N), 1});
    out.push_back({"Lambda[1]", std::make_shared<RepresentableCyclicSet>(1, N), 2});
    out.push_back({"Ncyc(C2)", std::make_shared<CyclicNerve>(FiniteMonoid::cyclic(2), N), -1});
    out.push_back({"Ncyc(C3)", std::make_shared<CyclicNerve>(FiniteMonoid::cyclic(3), N), -1});
    return out;
  };

  S.run("subdivision.group_action", "the C_r-action on sd_r X has order dividing r and commutes with faces and degeneracies",
        [&] {
          CheckResult r;
          for (const auto& e : base(2)) {
            for (int rr = 1; rr <= 4; ++rr) {
              Subdivision Sd(e.X, rr, 2);
              const auto c = check_subdivision_group_action(Sd, 2);
              if (!c.pass) r.fail(e.name + ", r=" + std::to_string(rr) + ": " + c.evidence.value("counterexample", ""));
            }
          }
          return r;
        });

  S.run("subdivision.identity", "sd_1 X = X", [] {
    CheckResult r;
    auto X = std::make_shared<RepresentableCyclicSet>(2, 4);
    Subdivision Sd(X, 1, 4);
    for (int k = 0; k <= 4; ++k) {
      r.expect(Sd.elements(k) == X->elements(k), "levels differ at " + std::to_string(k));
      for (ElementId x : X->elements(k)) {
        for (int i = 0; k > 0 && i <= k; ++i) r.expect(Sd.face(k, i, x) == X->face(k, i, x), "faces differ");
        for (int i = 0; k < 4 && i <= k; ++i) r.expect(Sd.degeneracy(k, i, x) == X->degeneracy(k, i, x), "degeneracies differ");
      }
    }
    return r;
  });

  S.run("subdivision.sd2_point_orbit", "(sd_2 Lambda[0])_0 has two elements swapped by C_2", [] {
    CheckResult r;
    auto X = std::make_shared<RepresentableCyclicSet>(0, 3);
    Subdivision Sd(X, 2, 1);
    const auto xs = Sd.elements(0);
    r.expect(xs.size() == 2, "level 0 does not have two elements");
    for (ElementId x : xs) r.expect(Sd.group_generator(0, x) != x, "C_2 fixes an element");
    return r;
  });

  S.run("subdivision.fixed_point_action", "the Lambda-action on fixed points does not depend on the P_r-preimage", [&] {
    CheckResult r;
    for (const auto& e : base(2)) {
      for (int rr = 1; rr <= 4; ++rr) {
        FixedPointCyclicSet F(e.X, rr, 2);
        const auto c = check_fixed_point_action(F, 2);
        if (!c.pass) r.fail(e.name + ", r=" + std::to_string(rr) + ": " + c.evidence.value("counterexample", ""));
      }
    }
    return r;
  });

  S.run("subdivision.free_rotation", "(sd_2 Lambda[0])^{C_2} is empty: the rotation of the circle by a half turn is free",
        [] {
          CheckResult r;
          auto X = std::make_shared<RepresentableCyclicSet>(0, 9);
          FixedPointCyclicSet F(X, 2, 4);
          Json sizes = Json::array();
          for (int k = 0; k <= 4; ++k) {
            sizes.push_back(F.elements(k).size());
            r.expect(F.elements(k).empty(), "fixed point at level " + std::to_string(k));
          }
          r.evidence["sizes"] = sizes;
          return r;
        });

  S.run("subdivision.period", "level n-1 of (sd_r Ncyc C_2)^{C_r} has 2^n elements, the period-n tuples", [] {
    CheckResult r;
    auto X = std::make_shared<CyclicNerve>(FiniteMonoid::cyclic(2), 23);
    for (int rr = 1; rr <= 4; ++rr) {
      FixedPointCyclicSet F(X, rr, 4);
      for (int n = 1; n * rr <= 24 && n <= 5; ++n) {
        r.expect(F.elements(n - 1).size() == (std::size_t{1} << n),
                 "r=" + std::to_string(rr) + ", level " + std::to_string(n - 1));
      }
    }
    return r;
  });

  S.run("subdivision.homology", "sd_r does not change homology, since it does not change the realization", [&] {
    CheckResult r;
    Json rows = Json::array();
    const int N = 3;
    for (const auto& e : base(N)) {
      if (e.name == "Ncyc(C3)") continue;
      const auto ref = homology(normalized_chains(*e.X, Ring::rationals(), N), N - 1).ranks();
      for (int rr = 2; rr <= 4; ++rr) {
        Subdivision Sd(e.X, rr, N);
        const auto got = homology(normalized_chains(Sd, Ring::rationals(), N), N - 1).ranks();
        r.expect(got == ref, e.name + ", r=" + std::to_string(rr));
      }
      rows.push_back({{"object", e.name}, {"ranks", ref}});
    }
    r.evidence["ranks_through_degree_2"] = rows;
    return r;
  });

  S.run("subdivision.linearized_fixed_points", "linearizing commutes with taking fixed points on permutation bases", [] {
    CheckResult r;
    auto X = std::make_shared<CyclicNerve>(FiniteMonoid::cyclic(2), 7);
    Subdivision Sd(X, 2, 3);
    FixedPointCyclicSet F(X, 2, 3);
    const auto fixed = basis_fixed_points(linearize_subdivision(Sd, Ring::rationals(), 3));
    r.expect(same_module(fixed, linearize(F, Ring::rationals(), 3)), "matrices differ");
    return r;
  });

  S.run("subdivision.naturality", "fixed points are natural for maps induced by monoid homomorphisms", [] {
    CheckResult r;
    struct Hom {
      FiniteMonoid from, to;
      std::vector<int> h;
    };
    const std::vector<Hom> homs{{FiniteMonoid::cyclic(4), FiniteMonoid::cyclic(2), {0, 1, 0, 1}},
                                {FiniteMonoid::cyclic(2), FiniteMonoid::cyclic(4), {0, 2}},
                                {FiniteMonoid::cyclic(3), FiniteMonoid::trivial(), {0, 0, 0}},
                                {FiniteMonoid::symmetric3(), FiniteMonoid::trivial(), {0, 0, 0, 0, 0, 0}}};
    for (const auto& hm : homs) {
      for (std::size_t a = 0; a < hm.from.size(); ++a) {
        for (std::size_t b = 0; b < hm.from.size(); ++b) {
          if (hm.h[hm.from.table[a][b]] != hm.to.table[hm.h[a]][hm.h[b]]) throw InputError("not a homomorphism");
        }
      }
      for (int rr = 1; rr <= 3; ++rr) {
        const int N = 2;
        auto X = std::make_shared<CyclicNerve>(hm.from, rr * (N + 1));
        auto Y = std::make_shared<CyclicNerve>(hm.to, rr * (N + 1));
        FixedPointCyclicSet FX(X, rr, N), FY(Y, rr, N);
        auto map = [&](int k, ElementId x) {
          auto t = X->decode(FX.source_level(k), x);
          for (auto& a : t) a = hm.h[static_cast<std::size_t>(a)];
          return Y->encode(t);
        };
        for (int k = 0; k <= N; ++k) {
          for (ElementId x : FX.elements(k)) {
            const ElementId y = map(k, x);
            r.expect(FY.contains(k, y), "image is not fixed");
            for (int i = 0; k > 0 && i <= k; ++i) r.expect(map(k - 1, FX.face(k, i, x)) == FY.face(k, i, y), "face");
            for (int i = 0; k < N && i <= k; ++i) {
              r.expect(map(k + 1, FX.degeneracy(k, i, x)) == FY.degeneracy(k, i, y), "degeneracy");
            }
            r.expect(map(k, FX.cycle(k, x)) == FY.cycle(k, y), "cycle");
          }
        }
      }
    }
    return r;
  });
}

// --- cyclotomic -----------------------------------------------------------------------

std::vector<std::pair<std::string, std::shared_ptr<const CyclicNerve>>> monoid_nerves(int truncation) {
  return {{"1", std::make_shared<CyclicNerve>(FiniteMonoid::trivial(), truncation)},
          {"C2", std::make_shared<CyclicNerve>(FiniteMonoid::cyclic(2), truncation)},
          {"C3", std::make_shared<CyclicNerve>(FiniteMonoid::cyclic(3), truncation)},
          {"S3", std::make_shared<CyclicNerve>(FiniteMonoid::symmetric3(), truncation)}};
}

void cyclotomic_suite(Suite& S, std::uint64_t seed) {
  S.run("cyclotomic.gamma", "gamma_r is a levelwise bijection onto the C_r-fixed points of sd_r, compatible with all structure maps", [] {
    CheckResult r;
    Json rows = Json::array();
    const int N = 4;
    for (const auto& [name, X] : monoid_nerves(4 * (N + 1))) {
      for (int rr = 1; rr <= 4; ++rr) {
        const auto c = check_gamma(X, rr, N);
        if (!c.pass) r.fail("M=" + name + ", r=" + std::to_string(rr) + ": " + c.evidence.value("counterexample", ""));
      }
      rows.push_back(name);
    }
    auto Cat = std::make_shared<CyclicNerve>(FiniteCategory::discrete(2), 4 * (N + 1));
    for (int rr = 1; rr <= 4; ++rr) {
      if (!check_gamma(Cat, rr, N).pass) r.fail("two-object category, r=" + std::to_string(rr));
    }
    rows.push_back("two-object discrete category");
    r.evidence["inputs"] = rows;
    r.evidence["r"] = "1..4";
    r.evidence["levels"] = "0..4";
    return r;
  });

  S.run("cyclotomic.compatibility", "gamma_mn agrees elementwise with gamma_m after gamma_n, under the identification of iterated fixed points", [seed] {
    CheckResult r;
    const int N = 3;
    Json rows = Json::array();
    for (const auto& [name, X] : monoid_nerves(6 * (N + 2))) {
      for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 2}, {2, 1}, {2, 2}, {2, 3}, {3, 2}}) {
        const auto c = check_cyclotomic_compatibility(X, m, n, N, seed);
        if (!c.pass) {
          r.fail("M=" + name + ", (m,n)=" + lvl(m, n) + ": " + c.evidence.value("counterexample", ""));
        }
        rows.push_back({{"M", name}, {"m", m}, {"n", n}, {"pass", c.pass}});
      }
    }
    r.evidence["cases"] = rows;
    r.evidence["levels"] = "0..3";
    return r;
  });
}

// --- hochschild -----------------------------------------------------------------------

GradedAlgebra q_monoid(const FiniteMonoid& M) { return GradedAlgebra::monoid_algebra(M, Ring::rationals()); }

void hochschild_suite(Suite& S, std::uint64_t) {
  S.run("hochschild.identities", "b^2 = 0, B^2 = 0, bB + Bb = 0 and t^{s+1} = 1", [] {
    CheckResult r;
    std::vector<std::pair<std::string, GradedAlgebra>> algebras{
        {"Q", GradedAlgebra::ground_field(Ring::rationals())},
        {"Q[C2]", q_monoid(FiniteMonoid::cyclic(2))},
        {"Q[C3]", q_monoid(FiniteMonoid::cyclic(3))},
        {"F2[C2]", GradedAlgebra::monoid_algebra(FiniteMonoid::cyclic(2), Ring::prime_field(2))},
        {"Lambda[x3]", GradedAlgebra::exterior(3)},
        {"Lambda[x5]", GradedAlgebra::exterior(5)},
        {"Q[x2]/x^2", GradedAlgebra::square_zero(2)}};
    for (const auto& [name, A] : algebras) {
      for (bool normalized : {true, false}) {
        const int s_max = normalized ? 6 : 5;
        const auto c = HochschildComplex(A, s_max, normalized).check_identities();
        if (!c.pass) r.fail(name + (normalized ? " (normalized): " : ": ") + c.evidence.value("counterexample", ""));
      }
    }
    const auto c = HochschildComplex(q_monoid(FiniteMonoid::symmetric3()), 3, false).check_identities();
    if (!c.pass) r.fail("Q[S3]: " + c.evidence.value("counterexample", ""));
    return r;
  });

  S.run("hochschild.monoid_coherence", "the cyclic bar construction of k[M] is the linearized cyclic nerve of M", [] {
    CheckResult r;
    for (const auto& [M, N] : std::vector<std::pair<FiniteMonoid, int>>{
             {FiniteMonoid::cyclic(2), 5}, {FiniteMonoid::cyclic(3), 4}, {FiniteMonoid::symmetric3(), 3}}) {
      const HochschildComplex H(q_monoid(M), N, false);
      CyclicNerve X(M, N);
      r.expect(same_module(H.unsigned_cyclic_module(), linearize(X, Ring::rationals(), N)),
               "modules differ for a monoid of order " + std::to_string(M.size()));
    }
    const HHTable hh = hh_simplicial(q_monoid(FiniteMonoid::cyclic(2)), 5);
    CyclicNerve X(FiniteMonoid::cyclic(2), 6);
    const auto nerve = homology(normalized_chains(X, Ring::rationals(), 6), 5).ranks();
    std::vector<std::size_t> mine;
    for (const auto& [s, rank] : hh.by_simplicial) mine.push_back(rank);
    r.expect(mine == nerve, "HH(Q[C2]) differs from the nerve homology");
    r.evidence["HH_Q[C2]"] = mine;
    return r;
  });

  S.run("hochschild.normalization", "normalized and un-normalized complexes have the same homology", [] {
    CheckResult r;
    for (const auto& [name, A] : std::vector<std::pair<std::string, GradedAlgebra>>{
             {"Q[C2]", q_monoid(FiniteMonoid::cyclic(2))}, {"Lambda[x3]", GradedAlgebra::exterior(3)}}) {
      const auto a = hh_simplicial(A, 5, true);
      const auto b = hh_simplicial(A, 5, false);
      std::map<std::pair<int, int>, std::size_t> ea, eb;
      for (const auto& e : a.entries) ea[{e.s, e.t}] = e.rank;
      for (const auto& e : b.entries) eb[{e.s, e.t}] = e.rank;
      r.expect(ea == eb, name + ": bigraded ranks differ");
    }
    return r;
  });

  S.run("hochschild.odd_spheres", "HH of an exterior algebra on a class of degree 2n+1 is divided powers tensor exterior", [] {
    CheckResult r;
    Json tables;
    for (int n : {1, 2}) {
      const HHTable hh = hh_total(GradedAlgebra::exterior(2 * n + 1), 12);
      Json ranks = Json::array();
      for (int d = 0; d <= 12; ++d) {
        const bool expected = (d % (2 * n) == 0) || (d >= 2 * n + 1 && (d - 2 * n - 1) % (2 * n) == 0);
        ranks.push_back(hh.by_total.at(d));
        r.expect(hh.by_total.at(d) == (expected ? 1u : 0u), "n=" + std::to_string(n) + ", degree " + std::to_string(d));
      }
      tables["n=" + std::to_string(n)] = ranks;
    }
    r.evidence["ranks_by_total_degree"] = tables;
    return r;
  });

  S.run("hochschild.cyclic", "HC(Q) is Q in even degrees and HC_0 = A/[A,A]", [] {
    CheckResult r;
    const auto q = hc(GradedAlgebra::ground_field(Ring::rationals()), 6);
    for (std::size_t n = 0; n < q.size(); ++n) r.expect(q[n] == (n % 2 == 0 ? 1u : 0u), "HC_" + std::to_string(n) + "(Q)");
    const auto a = hc(q_monoid(FiniteMonoid::cyclic(2)), 4);
    const auto b = hc(q_monoid(FiniteMonoid::cyclic(2)), 6);
    r.expect(a.front() == 2, "HC_0(Q[C2]) != 2");
    r.expect(std::equal(a.begin(), a.end(), b.begin()), "HC(Q[C2]) depends on the truncation");
    const auto s3 = hc(q_monoid(FiniteMonoid::symmetric3()), 2);
    r.expect(s3.front() == 3, "HC_0(Q[S3]) is not the number of conjugacy classes");
    r.evidence["HC_Q"] = q;
    r.evidence["HC_Q[C2]"] = a;
    return r;
  });

  S.run("hochschild.adams", "psi^k acts on the i-th Hodge piece by k^i, and alpha_i beta^j lies in piece i", [] {
    CheckResult r;
    const HochschildComplex H(GradedAlgebra::exterior(3), 6, true);
    const HodgeData E(H, 6);
    const auto contract = E.check_contract();
    if (!contract.pass) r.fail("contract: " + contract.evidence.value("counterexample", ""));
    const auto rep = adams_report(E, {1, 2, 3});
    r.expect(rep.ok, "eigenvalue law fails");
    Json dict = Json::array();
    for (const auto& c : rep.classes) {
      int piece = -1;
      for (std::size_t i = 0; i < c.pieces.size(); ++i) {
        if (c.pieces[i]) piece = static_cast<int>(i);
      }
      // t = 3s: alpha_s; t = 3s + 3: alpha_s beta
      const std::string cls = c.t == 3 * c.s ? "alpha_" + std::to_string(c.s) : "alpha_" + std::to_string(c.s) + " beta";
      r.expect(piece == c.s, cls + " is not in piece " + std::to_string(c.s));
      dict.push_back({{"class", cls}, {"total_degree", c.total}, {"hodge_piece", piece}});
    }
    r.evidence["dictionary"] = dict;
    return r;
  });
}

// --- duality --------------------------------------------------------------------------

void duality_suite(Suite& S, std::uint64_t) {
  S.run("duality.monoid", "over a field the dual complex has the dual homology (Q[C2], s <= 4)", [] {
    CheckResult r;
    const HochschildComplex H(q_monoid(FiniteMonoid::cyclic(2)), 5, true);
    const ChainComplex C = H.chains(0);
    const auto hom = homology(C, 4).ranks();
    auto co = cohomology_ranks(dual_complex(C));
    co.resize(hom.size());
    r.expect(co == hom, "ranks differ");
    r.evidence["ranks"] = hom;
    return r;
  });

  S.run("duality.sphere", "over a field the dual complex has the dual homology (exterior algebra on x_3, total <= 8)", [] {
    CheckResult r;
    const int D = 8;
    const HochschildComplex H(GradedAlgebra::exterior(3), D + 1, true);
    std::map<int, std::size_t> hom, co;
    for (int t = 0; t <= 2 * D; ++t) {
      const ChainComplex C = H.chains(t);
      const auto h = homology(C, C.valid_through).ranks();
      const auto c = cohomology_ranks(dual_complex(C));
      for (int s = 0; s < static_cast<int>(h.size()); ++s) {
        if (t - s < 0 || t - s > D) continue;
        hom[t - s] += h[static_cast<std::size_t>(s)];
        co[t - s] += c[static_cast<std::size_t>(s)];
      }
    }
    r.expect(hom == co, "ranks differ");
    Json ranks = Json::array();
    for (const auto& [d, k] : hom) ranks.push_back(k);
    r.evidence["ranks_by_total_degree"] = ranks;
    return r;
  });

  S.run("duality.even_sphere", "HH of Q[x_2n]/x^2 matches the free loop space cohomology of an even sphere", [] {
    CheckResult r;
    Json tables;
    for (int n : {1, 2}) {
      const int m = 2 * n;
      const HHTable hh = hh_total(GradedAlgebra::square_zero(m), 10);
      Json ranks = Json::array();
      for (int d = 0; d <= 10; ++d) {
        // Poincare series 1 + (x^{m-1} + x^m) / (1 - x^{2(m-1)})
        bool expected = d == 0;
        for (int k = 0; (2 * k) * (m - 1) + m - 1 <= d; ++k) {
          const int base = 2 * k * (m - 1) + m - 1;
          if (d == base || d == base + 1) expected = true;
        }
        ranks.push_back(hh.by_total.at(d));
        r.expect(hh.by_total.at(d) == (expected ? 1u : 0u), "m=" + std::to_string(m) + ", degree " + std::to_string(d));
      }
      tables["S^" + std::to_string(m)] = ranks;
    }
    r.evidence["ranks_by_total_degree"] = tables;
    return r;
  });

  S.run("duality.integers_rejected", "linear duals are taken over fields only", [] {
    CheckResult r;
    ChainComplex C;
    C.ring = Ring::integers();
    C.ranks = {1};
    C.d.emplace_back(0, 1);
    C.valid_through = 0;
    bool threw = false;
    try {
      dual_complex(C);
    } catch (const InputError&) {
      threw = true;
    }
    r.expect(threw, "the dual over Z was accepted");
    return r;
  });
}

}  // namespace

SuiteReport run_suite(const std::string& name, std::uint64_t seed) {
  static const std::map<std::string, void (*)(Suite&, std::uint64_t)> table{
      {"lambda", lambda_suite},         {"latching", latching_suite},     {"subdivision", subdivision_suite},
      {"cyclotomic", cyclotomic_suite}, {"hochschild", hochschild_suite}, {"duality", duality_suite}};
  Suite S(name, seed);
  if (name == "all") {
    for (const auto& n : suite_names()) table.at(n)(S, seed);
  } else {
    auto it = table.find(name);
    if (it == table.end()) throw InputError("unknown suite \"" + name + "\"");
    it->second(S, seed);
  }
  return S.take();
}

}  // namespace cyclotome
