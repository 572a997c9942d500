#include "cyclotome/smith.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "cyclotome/error.hpp"

namespace cyclotome {

namespace {

struct Work {
  ZMatrix A, U, V;
  bool cert;

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < A.cols; ++j) std::swap(A(a, j), A(b, j));
    if (cert) {
      for (std::size_t j = 0; j < U.cols; ++j) std::swap(U(a, j), U(b, j));
    }
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < A.rows; ++i) std::swap(A(i, a), A(i, b));
    if (cert) {
      for (std::size_t i = 0; i < V.rows; ++i) std::swap(V(i, a), V(i, b));
    }
  }
  // row_dst -= q * row_src
  void row_op(std::size_t dst, std::size_t src, const mpz_class& q) {
    if (q == 0) return;
    for (std::size_t j = 0; j < A.cols; ++j) A(dst, j) -= q * A(src, j);
    if (cert) {
      for (std::size_t j = 0; j < U.cols; ++j) U(dst, j) -= q * U(src, j);
    }
  }
  // col_dst -= q * col_src
  void col_op(std::size_t dst, std::size_t src, const mpz_class& q) {
    if (q == 0) return;
    for (std::size_t i = 0; i < A.rows; ++i) A(i, dst) -= q * A(i, src);
    if (cert) {
      for (std::size_t i = 0; i < V.rows; ++i) V(i, dst) -= q * V(i, src);
    }
  }
  void negate_row(std::size_t r) {
    for (std::size_t j = 0; j < A.cols; ++j) A(r, j) = -A(r, j);
    if (cert) {
      for (std::size_t j = 0; j < U.cols; ++j) U(r, j) = -U(r, j);
    }
  }
};

}  // namespace

SmithResult smith_normal_form(const ZMatrix& M, bool certificate) {
  Work w{M, {}, {}, certificate};
  if (certificate) {
    w.U = ZMatrix::identity(M.rows);
    w.V = ZMatrix::identity(M.cols);
  }
  ZMatrix& A = w.A;
  const std::size_t m = A.rows, n = A.cols;
  SmithResult out;

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    // Smallest nonzero magnitude in the trailing block.
    auto move_smallest = [&](bool whole_block) {
      std::size_t bi = m, bj = n;
      for (std::size_t i = t; i < m; ++i) {
        for (std::size_t j = t; j < n; ++j) {
          if (!whole_block && i != t && j != t) continue;
          if (A(i, j) == 0) continue;
          if (bi == m || abs(A(i, j)) < abs(A(bi, bj))) {
            bi = i;
            bj = j;
          }
        }
      }
      if (bi == m) return false;
      w.swap_rows(t, bi);
      w.swap_cols(t, bj);
      return true;
    };
    if (!move_smallest(true)) break;

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (A(i, t) == 0) continue;
        mpz_class q;
        mpz_tdiv_q(q.get_mpz_t(), A(i, t).get_mpz_t(), A(t, t).get_mpz_t());
        w.row_op(i, t, q);
        if (A(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (A(t, j) == 0) continue;
        mpz_class q;
        mpz_tdiv_q(q.get_mpz_t(), A(t, j).get_mpz_t(), A(t, t).get_mpz_t());
        w.col_op(j, t, q);
        if (A(t, j) != 0) clean = false;
      }
      if (!clean) {
        move_smallest(false);
        continue;
      }
      // Divisibility: fold an offending row into the pivot row and retry.
      std::size_t bad = m;
      for (std::size_t i = t + 1; i < m && bad == m; ++i) {
        for (std::size_t j = t + 1; j < n; ++j) {
          if (A(i, j) != 0 && !mpz_divisible_p(A(i, j).get_mpz_t(), A(t, t).get_mpz_t())) {
            bad = i;
            break;
          }
        }
      }
      if (bad == m) break;
      w.row_op(t, bad, -1);
    }
    if (A(t, t) < 0) w.negate_row(t);
    out.diagonal.push_back(A(t, t));
  }
  out.D = std::move(w.A);
  out.U = std::move(w.U);
  out.V = std::move(w.V);
  return out;
}

bool certify_smith(const ZMatrix& M, const SmithResult& S, std::string* why) {
  auto fail = [why](const std::string& s) {
    if (why) *why = s;
    return false;
  };
  if (S.U.rows != M.rows || S.U.cols != M.rows || S.V.rows != M.cols || S.V.cols != M.cols) {
    return fail("certificate has the wrong shape");
  }
  if (!(S.U * M * S.V == S.D)) return fail("U M V != D");
  if (abs(determinant(S.U)) != 1) return fail("U is not unimodular");
  if (abs(determinant(S.V)) != 1) return fail("V is not unimodular");
  std::size_t nonzero = 0;
  for (std::size_t i = 0; i < S.D.rows; ++i) {
    for (std::size_t j = 0; j < S.D.cols; ++j) {
      if (i != j && S.D(i, j) != 0) return fail("D is not diagonal");
    }
  }
  for (std::size_t i = 0; i < std::min(S.D.rows, S.D.cols); ++i) {
    const mpz_class& d = S.D(i, i);
    if (d < 0) return fail("negative diagonal entry");
    if (d == 0) continue;
    if (nonzero != i) return fail("zero diagonal entry before a nonzero one");
    if (i > 0 && !mpz_divisible_p(d.get_mpz_t(), S.D(i - 1, i - 1).get_mpz_t())) {
      return fail("divisibility chain broken");
    }
    ++nonzero;
  }
  return true;
}

std::vector<mpz_class> invariant_factors(const SparseMatrix& M) {
  if (!M.is_integral()) throw InputError("invariant factors need an integral matrix");
  std::vector<std::map<std::size_t, mpz_class>> cols(M.cols());
  std::vector<std::set<std::size_t>> rows(M.rows());
  for (std::size_t j = 0; j < M.cols(); ++j) {
    for (const auto& [i, v] : M.column(j)) {
      cols[j].emplace(i, v.get_num());
      rows[i].insert(j);
    }
  }
  std::vector<bool> col_alive(M.cols(), true), row_alive(M.rows(), true);
  std::size_t units = 0;

  // Unit pivots: clear the pivot row with column operations, then drop the
  // pivot row and column.  This changes neither the nontrivial factors nor
  // the rank beyond the removed 1.
  for (std::size_t j = 0; j < cols.size(); ++j) {
    std::size_t r = M.rows();
    for (const auto& [i, v] : cols[j]) {
      if (v == 1 || v == -1) {
        r = i;
        break;
      }
    }
    if (r == M.rows()) continue;
    const mpz_class pivot = cols[j][r];
    const std::vector<std::size_t> others(rows[r].begin(), rows[r].end());
    for (std::size_t c : others) {
      if (c == j) continue;
      const mpz_class q = cols[c][r] * pivot;  // pivot is its own inverse
      for (const auto& [i, v] : cols[j]) {
        mpz_class& x = cols[c][i];
        x -= q * v;
        if (x == 0) {
          cols[c].erase(i);
          rows[i].erase(c);
        } else {
          rows[i].insert(c);
        }
      }
    }
    for (const auto& [i, v] : cols[j]) rows[i].erase(j);
    cols[j].clear();
    col_alive[j] = false;
    row_alive[r] = false;
    ++units;
  }

  std::vector<std::size_t> row_index(M.rows()), live_cols;
  std::size_t nr = 0;
  for (std::size_t i = 0; i < M.rows(); ++i) {
    if (row_alive[i] && !rows[i].empty()) row_index[i] = nr++;
  }
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (col_alive[j] && !cols[j].empty()) live_cols.push_back(j);
  }
  ZMatrix rest(nr, live_cols.size());
  for (std::size_t k = 0; k < live_cols.size(); ++k) {
    for (const auto& [i, v] : cols[live_cols[k]]) rest(row_index[i], k) = v;
  }
  std::vector<mpz_class> out(units, mpz_class(1));
  const auto S = smith_normal_form(rest, false);
  out.insert(out.end(), S.diagonal.begin(), S.diagonal.end());
  return out;
}

}  // namespace cyclotome
