#pragma once

// The cyclic bar construction of a graded algebra A: C_s = A (x) A^{(x)s}, or
// A (x) Abar^{(x)s} when normalized (Abar = A / unit line), split by internal
// degree t.  Signs: d_i merges a_i a_{i+1} for i < s, d_s moves a_s to the
// front with its Koszul sign; the signed cyclic operator is (-1)^s times the
// Koszul-signed rotation; B = (1 - t) s_extra N.

#include <functional>
#include <map>
#include <vector>

#include "cyclotome/algebra.hpp"
#include "cyclotome/chain_complex.hpp"
#include "cyclotome/check.hpp"
#include "cyclotome/cyclic_module.hpp"
#include "cyclotome/sparse_matrix.hpp"

namespace cyclotome {

using Word = std::vector<int>;

inline constexpr std::size_t kDefaultChainCap = 200'000;

class HochschildComplex {
 public:
  HochschildComplex(GradedAlgebra A, int s_max, bool normalized = true, std::size_t cap = kDefaultChainCap);

  const GradedAlgebra& algebra() const { return A_; }
  int s_max() const { return s_max_; }
  bool normalized() const { return normalized_; }

  /// Basis words of C_s in lexicographic order.
  const std::vector<Word>& basis(int s) const { return basis_.at(static_cast<std::size_t>(s)); }
  int internal_degree(const Word& w) const;
  /// Positions in basis(s) of the words of internal degree t.
  std::vector<std::size_t> slice(int s, int t) const;
  /// Internal degrees that occur in some C_s, s <= s_max.
  std::vector<int> internal_degrees() const;

  SparseMatrix face(int s, int i) const;
  /// s_i : C_{s-1} -> C_s inserting the unit after position i (un-normalized only).
  SparseMatrix degeneracy(int s, int i) const;
  SparseMatrix b(int s) const;
  /// Signed cyclic operator on C_s (un-normalized only: the rotation does not
  /// preserve the degenerate part).
  SparseMatrix cyclic_operator(int s) const;
  /// Rotation (a_s, a_0, ..., a_{s-1}) with the Koszul sign only: the cyclic
  /// structure map of the cyclic bar construction (un-normalized only).
  SparseMatrix rotation(int s) const;
  /// Connes' operator C_s -> C_{s+1}; needs s + 1 <= s_max.
  SparseMatrix connes_B(int s) const;

  /// b^2 = 0, B^2 = 0, bB + Bb = 0 and (un-normalized) t^{s+1} = 1.
  CheckResult check_identities() const;

  /// Faces, degeneracies and rotation as a cyclic module (un-normalized only).
  /// For k[M] this is the linearized cyclic nerve of M.
  CyclicModule unsigned_cyclic_module() const;

  /// (C_{*,t}, b) in degrees s = 0..s_max.
  ChainComplex chains(int t) const;
  /// (C_*, b) with all internal degrees together.
  ChainComplex chains() const;

  /// Position of a word in the basis of C_s, or npos (e.g. a degenerate word).
  std::size_t index_of(int s, const Word& w) const;
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  using Combination = std::map<Word, mpq_class>;
  SparseMatrix to_matrix(int src, int dst, const std::function<Combination(const Word&)>& op) const;
  Combination face_of(const Word& w, int i) const;
  Combination signed_cycle_of(const Word& w) const;
  Combination apply_signed_cycle(const Combination& c) const;

  GradedAlgebra A_;
  int s_max_;
  bool normalized_;
  std::vector<std::vector<Word>> basis_;
  std::vector<std::map<Word, std::size_t>> index_;
};

/// Homology of (C, b) per bidegree.
struct BigradedEntry {
  int s = 0;
  int t = 0;
  int total = 0;  // t - s
  std::size_t rank = 0;
};

struct HHTable {
  std::vector<BigradedEntry> entries;  // nonzero entries only
  std::map<int, std::size_t> by_total;     // total degree -> rank
  std::map<int, std::size_t> by_simplicial;  // s -> rank (summed over t)
  int total_max = -1;
  int simplicial_max = -1;
};

/// HH by total degree t - s for 0..total_max; needs a connective-gap algebra,
/// which makes every bidegree finite and exact.
HHTable hh_total(const GradedAlgebra& A, int total_max, bool normalized = true,
                 std::size_t cap = kDefaultChainCap);
/// HH by simplicial degree 0..simplicial_max, summed over internal degrees.
HHTable hh_simplicial(const GradedAlgebra& A, int simplicial_max, bool normalized = true,
                      std::size_t cap = kDefaultChainCap);

/// Cyclic homology from the b-B total complex, degrees 0..n_max.
std::vector<std::size_t> hc(const GradedAlgebra& A, int n_max, std::size_t cap = kDefaultChainCap);
/// The total complex itself (degrees 0..n_max+1, exact through n_max).
ChainComplex connes_total_complex(const HochschildComplex& H, int n_max);

}  // namespace cyclotome
