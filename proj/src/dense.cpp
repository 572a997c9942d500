#include "cyclotome/dense.hpp"

#include <utility>

#include "cyclotome/error.hpp"

namespace cyclotome {

QMatrix to_dense(const SparseMatrix& M) {
  QMatrix D(M.rows(), M.cols());
  for (std::size_t j = 0; j < M.cols(); ++j) {
    for (const auto& [i, v] : M.column(j)) D(i, j) = v;
  }
  return D;
}

SparseMatrix to_sparse(const QMatrix& M) {
  SparseMatrix S(M.rows, M.cols);
  for (std::size_t j = 0; j < M.cols; ++j) {
    for (std::size_t i = 0; i < M.rows; ++i) {
      if (M(i, j) != 0) S.column(j).emplace_back(i, M(i, j));
    }
  }
  return S;
}

ZMatrix to_integer(const SparseMatrix& M) {
  ZMatrix D(M.rows(), M.cols());
  for (std::size_t j = 0; j < M.cols(); ++j) {
    for (const auto& [i, v] : M.column(j)) {
      if (v.get_den() != 1) throw InputError("matrix has a non-integral entry");
      D(i, j) = v.get_num();
    }
  }
  return D;
}

std::vector<std::size_t> rref(QMatrix& M) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < M.cols && row < M.rows; ++c) {
    std::size_t p = row;
    while (p < M.rows && M(p, c) == 0) ++p;
    if (p == M.rows) continue;
    if (p != row) {
      for (std::size_t j = 0; j < M.cols; ++j) std::swap(M(p, j), M(row, j));
    }
    const mpq_class inv = 1 / M(row, c);
    for (std::size_t j = c; j < M.cols; ++j) M(row, j) *= inv;
    for (std::size_t i = 0; i < M.rows; ++i) {
      if (i == row || M(i, c) == 0) continue;
      const mpq_class f = M(i, c);
      for (std::size_t j = c; j < M.cols; ++j) M(i, j) -= f * M(row, j);
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

std::size_t rank(QMatrix M) { return rref(M).size(); }

QMatrix nullspace(const QMatrix& M) {
  QMatrix R = M;
  const auto pivots = rref(R);
  std::vector<bool> is_pivot(M.cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  QMatrix N(M.cols, M.cols - pivots.size());
  std::size_t k = 0;
  for (std::size_t f = 0; f < M.cols; ++f) {
    if (is_pivot[f]) continue;
    N(f, k) = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) N(pivots[r], k) = -R(r, f);
    ++k;
  }
  return N;
}

QMatrix column_space(const QMatrix& M) {
  QMatrix R = M;
  const auto pivots = rref(R);
  QMatrix B(M.rows, pivots.size());
  for (std::size_t k = 0; k < pivots.size(); ++k) {
    for (std::size_t i = 0; i < M.rows; ++i) B(i, k) = M(i, pivots[k]);
  }
  return B;
}

QMatrix hconcat(const QMatrix& A, const QMatrix& B) {
  if (A.rows != B.rows) throw InputError("hconcat needs equal row counts");
  QMatrix C(A.rows, A.cols + B.cols);
  for (std::size_t i = 0; i < A.rows; ++i) {
    for (std::size_t j = 0; j < A.cols; ++j) C(i, j) = A(i, j);
    for (std::size_t j = 0; j < B.cols; ++j) C(i, A.cols + j) = B(i, j);
  }
  return C;
}

std::optional<QMatrix> solve(const QMatrix& A, const QMatrix& b) {
  QMatrix aug = hconcat(A, b);
  const auto pivots = rref(aug);
  for (auto p : pivots) {
    if (p >= A.cols) return std::nullopt;
  }
  QMatrix x(A.cols, b.cols);
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    for (std::size_t j = 0; j < b.cols; ++j) x(pivots[r], j) = aug(r, A.cols + j);
  }
  return x;
}

mpz_class determinant(ZMatrix M) {
  if (M.rows != M.cols) throw InputError("determinant of a non-square matrix");
  const std::size_t n = M.rows;
  if (n == 0) return 1;
  mpz_class sign = 1, prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (M(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && M(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(M(p, j), M(k, j));
      sign = -sign;
    }
    if (k + 1 == n) break;
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class v = M(i, j) * M(k, k) - M(i, k) * M(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        M(i, j) = v;
      }
      M(i, k) = 0;
    }
    prev = M(k, k);
  }
  return sign * M(n - 1, n - 1);
}

}  // namespace cyclotome
