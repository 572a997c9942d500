#pragma once

// Small dense exact matrices, used for Smith normal form certificates and for
// linear algebra on homology (representatives, induced maps).

#include <optional>
#include <vector>

#include <gmpxx.h>

#include "cyclotome/sparse_matrix.hpp"

namespace cyclotome {

template <class T>
struct DenseMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<T> data;

  DenseMatrix() = default;
  DenseMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, T(0)) {}

  T& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

  static DenseMatrix identity(std::size_t n) {
    DenseMatrix I(n, n);
    for (std::size_t i = 0; i < n; ++i) I(i, i) = 1;
    return I;
  }

  DenseMatrix transpose() const {
    DenseMatrix T_(cols, rows);
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) T_(j, i) = (*this)(i, j);
    }
    return T_;
  }

  bool is_zero() const {
    for (const auto& v : data) {
      if (v != 0) return false;
    }
    return true;
  }

  friend DenseMatrix operator*(const DenseMatrix& A, const DenseMatrix& B) {
    DenseMatrix C(A.rows, B.cols);
    for (std::size_t i = 0; i < A.rows; ++i) {
      for (std::size_t k = 0; k < A.cols; ++k) {
        const T& a = A(i, k);
        if (a == 0) continue;
        for (std::size_t j = 0; j < B.cols; ++j) C(i, j) += a * B(k, j);
      }
    }
    return C;
  }
  friend DenseMatrix operator+(const DenseMatrix& A, const DenseMatrix& B) {
    DenseMatrix C = A;
    for (std::size_t i = 0; i < C.data.size(); ++i) C.data[i] += B.data[i];
    return C;
  }
  friend DenseMatrix operator-(const DenseMatrix& A, const DenseMatrix& B) {
    DenseMatrix C = A;
    for (std::size_t i = 0; i < C.data.size(); ++i) C.data[i] -= B.data[i];
    return C;
  }
  friend DenseMatrix operator*(const T& s, const DenseMatrix& A) {
    DenseMatrix C = A;
    for (auto& v : C.data) v *= s;
    return C;
  }
  friend bool operator==(const DenseMatrix& A, const DenseMatrix& B) {
    return A.rows == B.rows && A.cols == B.cols && A.data == B.data;
  }
};

using ZMatrix = DenseMatrix<mpz_class>;
using QMatrix = DenseMatrix<mpq_class>;

QMatrix to_dense(const SparseMatrix& M);
SparseMatrix to_sparse(const QMatrix& M);
ZMatrix to_integer(const SparseMatrix& M);

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> rref(QMatrix& M);
std::size_t rank(QMatrix M);
/// Columns form a basis of the null space.
QMatrix nullspace(const QMatrix& M);
/// Columns form a basis of the column space (a subset of the columns of M).
QMatrix column_space(const QMatrix& M);
/// Some x with A x = b, if one exists.
std::optional<QMatrix> solve(const QMatrix& A, const QMatrix& b);
/// Horizontal concatenation.
QMatrix hconcat(const QMatrix& A, const QMatrix& B);

/// Determinant by fraction-free (Bareiss) elimination.
mpz_class determinant(ZMatrix M);

}  // namespace cyclotome
