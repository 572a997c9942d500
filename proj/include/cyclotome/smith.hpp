#pragma once

#include <string>
#include <vector>

#include "cyclotome/dense.hpp"
#include "cyclotome/sparse_matrix.hpp"

namespace cyclotome {

/// U M V = D with U, V unimodular and D diagonal, d_1 | d_2 | ... , d_i >= 0.
struct SmithResult {
  ZMatrix U;
  ZMatrix D;
  ZMatrix V;
  std::vector<mpz_class> diagonal;  // nonzero diagonal entries, in order
};

/// Smallest-magnitude pivoting with row and column moves.  Without a
/// certificate only D and the diagonal are filled in.
SmithResult smith_normal_form(const ZMatrix& M, bool certificate = true);

/// Re-checks a certificate by exact multiplication; on failure the reason is
/// written to `why`.
bool certify_smith(const ZMatrix& M, const SmithResult& S, std::string* why = nullptr);

/// Nonzero invariant factors of an integral sparse matrix, in divisibility
/// order.  Unit pivots are eliminated sparsely first; the rest goes through
/// the dense algorithm.
std::vector<mpz_class> invariant_factors(const SparseMatrix& M);

}  // namespace cyclotome
