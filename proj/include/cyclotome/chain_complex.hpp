#pragma once

#include <string>
#include <vector>

#include "cyclotome/check.hpp"
#include "cyclotome/cyclic_set.hpp"
#include "cyclotome/kernels.hpp"
#include "cyclotome/sparse_matrix.hpp"

namespace cyclotome {

/// Bounded chain complex of free modules in degrees 0..top().
/// d[n] : C_n -> C_{n-1} is a ranks[n-1] x ranks[n] matrix; d[0] has no rows.
struct ChainComplex {
  Ring ring = Ring::rationals();
  std::vector<std::size_t> ranks;
  std::vector<SparseMatrix> d;
  std::vector<std::vector<std::string>> labels;  // optional, per degree
  /// Homology is exact in degrees <= valid_through.
  int valid_through = -1;
  /// True when no generators exist above top().
  bool complete = false;

  int top() const { return static_cast<int>(ranks.size()) - 1; }
  /// Shapes and ring compatibility; throws InputError.
  void validate() const;
  /// d_{n} d_{n+1} = 0 in every degree, computed in the ring.
  CheckResult check_d_squared() const;
};

struct HomologyGroup {
  int degree = 0;
  std::size_t rank = 0;              // free rank (Betti number over fields)
  std::vector<std::string> torsion;  // over Z: invariant factors > 1
};

struct HomologyTable {
  Ring ring;
  int valid_through = -1;
  std::vector<HomologyGroup> groups;

  std::vector<std::size_t> ranks() const;
};

/// Chains of X on levels 0..N: free on the non-degenerate elements (or on all
/// elements when normalized is false), with d = sum (-1)^i d_i.  Homology is
/// exact in degrees <= N-1.  If every non-degenerate element is known to live
/// at level <= nondegenerate_bound <= N, the complex is marked complete.
ChainComplex normalized_chains(const SimplicialSet& X, const Ring& R, int N, bool normalized = true,
                               int nondegenerate_bound = -1);

/// Homology in degrees 0..min(max_degree, valid_through).  Throws RangeError
/// when max_degree exceeds the validity window.
HomologyTable homology(const ChainComplex& C, int max_degree = -1, KernelMode mode = KernelMode::Parallel);

struct EulerCharacteristic {
  long long value = 0;
  /// False when generators beyond the truncation could change the value.
  bool certain = false;
};
EulerCharacteristic euler_characteristic(const ChainComplex& C);

/// Degreewise linear dual: delta[n] : C^n -> C^{n+1} is d_{n+1} transposed.
struct CochainComplex {
  Ring ring = Ring::rationals();
  std::vector<std::size_t> ranks;
  std::vector<SparseMatrix> delta;
  int valid_through = -1;
};

/// Field coefficients only; throws InputError over Z.
CochainComplex dual_complex(const ChainComplex& C);
/// Cohomology ranks in degrees 0..valid_through, from the transposed matrices.
std::vector<std::size_t> cohomology_ranks(const CochainComplex& D, KernelMode mode = KernelMode::Parallel);

}  // namespace cyclotome
