#pragma once

#include <vector>

#include "cyclotome/chain_complex.hpp"
#include "cyclotome/check.hpp"
#include "cyclotome/cyclic_set.hpp"
#include "cyclotome/sparse_matrix.hpp"
#include "cyclotome/subdivision.hpp"

namespace cyclotome {

/// Levels 0..N of a (cyclic) module with explicit operator matrices.
/// Matrices act on column vectors: faces[n][i] maps level n to level n-1,
/// degeneracies[n][i] maps level n-1 to level n, cycle[n] acts on level n.
/// cycle is empty for a merely simplicial module.
struct CyclicModule {
  Ring ring = Ring::rationals();
  std::vector<std::size_t> ranks;
  std::vector<std::vector<SparseMatrix>> faces;
  std::vector<std::vector<SparseMatrix>> degeneracies;
  std::vector<SparseMatrix> cycle;

  int truncation() const { return static_cast<int>(ranks.size()) - 1; }
  bool has_cycle() const { return !cycle.empty(); }
  /// Simplicial identities, and t^{n+1} = 1 with t d_i = d_{i-1} t and
  /// t s_i = s_{i-1} t (1 <= i <= n) when a cycle is present.
  CheckResult check_identities() const;
};

/// Free module on X_n with permutation and projection matrices, basis in
/// increasing element-id order.  The cycle is filled in when X is cyclic.
CyclicModule linearize(const SimplicialSet& X, const Ring& R, int N);

/// Linearized sd_r X together with the C_r generator on each level.  The
/// cycle operator is the sheet-0 lift of tau, i.e. t on the underlying level.
struct SubdividedModule {
  int r = 1;
  CyclicModule module;
  std::vector<SparseMatrix> group_generator;
};
SubdividedModule linearize_subdivision(const Subdivision& S, const Ring& R, int N);

/// Restriction to the span of the basis vectors fixed by the C_r generator.
/// Throws if an operator does not preserve that span.
CyclicModule basis_fixed_points(const SubdividedModule& M);

/// Un-normalized Moore complex: C_n = M_n, d = sum (-1)^i d_i.  Exact in
/// degrees <= N-1.
ChainComplex moore_complex(const CyclicModule& M);

/// Matrix-by-matrix comparison over the module ring.
bool same_module(const CyclicModule& A, const CyclicModule& B);

}  // namespace cyclotome
