#pragma once

// Rank kernels over Q and F_p.  The serial column reduction is the reference;
// the OpenMP variant reduces a batch of columns concurrently against a frozen
// set of pivots and then finalizes the batch in column order.  Both return the
// same rank for every input.

#include <cstddef>

#include "cyclotome/sparse_matrix.hpp"

namespace cyclotome {

enum class KernelMode { Serial, Parallel };

/// Rank over the ring's fraction field (Q for Z).
std::size_t rank_serial(const SparseMatrix& M, const Ring& R);
std::size_t rank_parallel(const SparseMatrix& M, const Ring& R, std::size_t batch = 256);
std::size_t matrix_rank(const SparseMatrix& M, const Ring& R, KernelMode mode = KernelMode::Parallel);

}  // namespace cyclotome
