#pragma once

// Eulerian idempotents on the Hochschild complex of a graded-commutative
// algebra over Q, and the Adams operations psi^k = sum_i k^i e^{(i)}.

#include <map>
#include <vector>

#include "cyclotome/check.hpp"
#include "cyclotome/hochschild.hpp"
#include "cyclotome/sparse_matrix.hpp"

namespace cyclotome {

inline constexpr int kMaxHodgeDegree = 7;

class HodgeData {
 public:
  /// Idempotents on C_0..C_{s_max}; s_max <= min(H.s_max(), 7).
  HodgeData(const HochschildComplex& H, int s_max);

  const HochschildComplex& complex() const { return *H_; }
  int s_max() const { return s_max_; }
  /// e^{(i)} on C_s for 0 <= i <= s (e^{(0)} vanishes for s > 0).
  const SparseMatrix& idempotent(int s, int i) const;
  SparseMatrix adams(int s, int k) const;

  /// Idempotent, pairwise orthogonal, summing to the identity, commuting with
  /// b; psi^1 = 1 and psi^2, psi^3 commute with b.
  CheckResult check_contract() const;

 private:
  const HochschildComplex* H_;
  int s_max_;
  std::vector<std::vector<SparseMatrix>> e_;
};

/// Homology classes in one bidegree with their Hodge pieces and the induced
/// Adams operations.
struct HodgeClassReport {
  int s = 0;
  int t = 0;
  int total = 0;
  std::size_t rank = 0;
  /// pieces[i] = dim of the i-th Hodge summand of HH_{s,t}.
  std::vector<std::size_t> pieces;
  /// k -> multiplicity of the eigenvalue k^i, per i.
  std::map<int, std::vector<std::size_t>> eigen;
  /// Every k: the induced map is diagonalizable with eigenvalue k^i exactly on
  /// piece i.
  bool spectrum_ok = false;
};

struct AdamsReport {
  std::vector<HodgeClassReport> classes;
  /// psi^k psi^l = psi^{kl} on homology representatives, k, l in {1, 2, 3}.
  CheckResult multiplicative;
  bool ok = false;
};

/// Every bidegree (s, t) with s < E.s_max() and nonzero HH, with the
/// eigenvalue data for the Adams indices in ks.
AdamsReport adams_report(const HodgeData& E, const std::vector<int>& ks);

}  // namespace cyclotome
