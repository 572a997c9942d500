#pragma once

#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "cyclotome/nerve.hpp"
#include "cyclotome/sparse_matrix.hpp"

namespace cyclotome {

/// Finite-dimensional unital associative algebra over Q or F_p with a basis of
/// homogeneous elements of non-negative internal degree.
struct GradedAlgebra {
  using Term = std::pair<int, mpq_class>;  // (basis index, coefficient)

  Ring field = Ring::rationals();
  std::vector<std::string> names;
  std::vector<int> degrees;
  int unit = 0;
  /// mult[i][j] = e_i e_j as a sparse combination, sorted by basis index.
  std::vector<std::vector<std::vector<Term>>> mult;
  /// Declared graded commutativity; validate() confirms it.
  bool commutative = false;

  std::size_t dim() const { return names.size(); }
  /// Every non-unit basis element has degree >= 2.
  bool connective_gap() const;
  /// Unit laws, associativity, degree additivity and (if declared) graded
  /// commutativity, over all basis triples.  Throws InputError naming the
  /// violating triple.
  void validate() const;

  /// Sets e_i e_j += c e_k.
  void add_product(int i, int j, int k, const mpq_class& c);

  static GradedAlgebra ground_field(const Ring& field);
  /// k[M] with the monoid's element order as basis and degree 0.
  static GradedAlgebra monoid_algebra(const FiniteMonoid& M, const Ring& field);
  /// Exterior algebra on one generator of odd degree.
  static GradedAlgebra exterior(int degree, const Ring& field = Ring::rationals());
  /// k[x]/x^2 with |x| = degree.
  static GradedAlgebra square_zero(int degree, const Ring& field = Ring::rationals());
  /// Formal cochain model of S^m: m = 2n+1 gives the exterior algebra on x_{2n+1},
  /// m = 2n gives Q[x_{2n}]/x^2.
  static GradedAlgebra sphere_model(int n, bool odd);
};

}  // namespace cyclotome
