#include "cyclotome/hodge.hpp"

#include <algorithm>
#include <numeric>

#include "cyclotome/dense.hpp"
#include "cyclotome/error.hpp"
#include "cyclotome/kernels.hpp"

namespace cyclotome {

namespace {

using Poly = std::vector<mpq_class>;  // coefficients of x^0, x^1, ...

// binom(x - d + s - 1, s) as a polynomial in x.
Poly descent_polynomial(int s, int d) {
  Poly p{mpq_class(1)};
  mpz_class fact = 1;
  for (int j = 0; j < s; ++j) {
    const mpq_class c = s - 1 - d - j;  // factor (x + c)
    Poly q(p.size() + 1, mpq_class(0));
    for (std::size_t i = 0; i < p.size(); ++i) {
      q[i] += c * p[i];
      q[i + 1] += p[i];
    }
    p = std::move(q);
    fact *= j + 1;
  }
  for (auto& v : p) v /= fact;
  return p;
}

mpz_class ipow(int k, int i) {
  mpz_class r = 1;
  for (int j = 0; j < i; ++j) r *= k;
  return r;
}

}  // namespace

HodgeData::HodgeData(const HochschildComplex& H, int s_max) : H_(&H), s_max_(s_max) {
  const GradedAlgebra& A = H.algebra();
  if (A.field.kind != Ring::Kind::Q) throw InputError("the Hodge decomposition is computed over Q");
  if (!A.commutative) throw InputError("the Hodge decomposition needs a graded-commutative algebra");
  if (s_max < 0 || s_max > std::min(H.s_max(), kMaxHodgeDegree)) {
    throw InputError("Hodge degree bound must lie in 0.." + std::to_string(std::min(H.s_max(), kMaxHodgeDegree)));
  }
  for (int s = 0; s <= s_max; ++s) {
    const auto& words = H.basis(s);
    std::vector<Poly> by_descent;
    for (int d = 0; d < std::max(s, 1); ++d) by_descent.push_back(descent_polynomial(s, d));
    // acc[j][row][i]: coefficient of e^{(i)} from word j to word row
    std::vector<std::map<std::size_t, Poly>> acc(words.size());
    std::vector<int> sigma(static_cast<std::size_t>(s));
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
      int des = 0;
      for (int p = 0; p + 1 < s; ++p) des += sigma[p] > sigma[p + 1];
      const Poly& coeff = by_descent[static_cast<std::size_t>(des)];
      for (std::size_t j = 0; j < words.size(); ++j) {
        const Word& w = words[j];
        // letter q of a_1..a_s moves to position sigma[q]
        Word v = w;
        for (int q = 0; q < s; ++q) v[static_cast<std::size_t>(sigma[q]) + 1] = w[static_cast<std::size_t>(q) + 1];
        int parity = 0;
        for (int q = 0; q < s; ++q) {
          for (int q2 = q + 1; q2 < s; ++q2) {
            if (sigma[q] < sigma[q2]) continue;
            // sgn(sigma) times the Koszul sign of the internal degrees
            const int a = A.degrees[static_cast<std::size_t>(w[static_cast<std::size_t>(q) + 1])];
            const int b = A.degrees[static_cast<std::size_t>(w[static_cast<std::size_t>(q2) + 1])];
            parity ^= 1 ^ ((a & 1) & (b & 1));
          }
        }
        const std::size_t row = H.index_of(s, v);
        auto& poly = acc[j][row];
        poly.resize(static_cast<std::size_t>(s) + 1);
        for (std::size_t i = 0; i < coeff.size(); ++i) poly[i] += parity ? -coeff[i] : coeff[i];
      }
    } while (std::next_permutation(sigma.begin(), sigma.end()));

    std::vector<SparseMatrix> es(static_cast<std::size_t>(s) + 1, SparseMatrix(words.size(), words.size()));
    for (std::size_t j = 0; j < words.size(); ++j) {
      for (const auto& [row, poly] : acc[j]) {
        for (std::size_t i = 0; i < poly.size(); ++i) {
          if (poly[i] != 0) es[i].column(j).emplace_back(row, poly[i]);
        }
      }
    }
    e_.push_back(std::move(es));
  }
}

const SparseMatrix& HodgeData::idempotent(int s, int i) const {
  if (s < 0 || s > s_max_ || i < 0 || i > s) throw InputError("Hodge index out of range");
  return e_[static_cast<std::size_t>(s)][static_cast<std::size_t>(i)];
}

SparseMatrix HodgeData::adams(int s, int k) const {
  SparseMatrix psi(H_->basis(s).size(), H_->basis(s).size());
  for (int i = 0; i <= s; ++i) psi = psi + mpq_class(ipow(k, i)) * idempotent(s, i);
  return psi;
}

CheckResult HodgeData::check_contract() const {
  CheckResult res;
  auto at = [](const std::string& what, int s, int i, int j) {
    return what + " (s=" + std::to_string(s) + ", i=" + std::to_string(i) + ", j=" + std::to_string(j) + ")";
  };
  for (int s = 0; s <= s_max_; ++s) {
    const std::size_t n = H_->basis(s).size();
    SparseMatrix sum(n, n);
    for (int i = 0; i <= s; ++i) {
      const auto& ei = idempotent(s, i);
      sum = sum + ei;
      for (int j = 0; j <= s; ++j) {
        const SparseMatrix prod = ei * idempotent(s, j);
        if (i == j) {
          res.expect(prod == ei, at("not idempotent", s, i, j));
        } else {
          res.expect(prod.is_zero(), at("not orthogonal", s, i, j));
        }
      }
      if (s >= 1) {
        const SparseMatrix b = H_->b(s);
        const SparseMatrix& below = i <= s - 1 ? idempotent(s - 1, i) : SparseMatrix(b.rows(), b.rows());
        res.expect(b * ei == below * b, at("b does not preserve the piece", s, i, 0));
      }
    }
    res.expect(sum == SparseMatrix::identity(n), at("idempotents do not sum to 1", s, 0, 0));
    res.expect(adams(s, 1) == SparseMatrix::identity(n), at("psi^1 is not the identity", s, 0, 0));
    for (int k : {2, 3}) {
      if (s >= 1) res.expect(H_->b(s) * adams(s, k) == adams(s - 1, k) * H_->b(s), at("psi^k is not a chain map", s, k, 0));
    }
  }
  res.evidence["s_max"] = s_max_;
  return res;
}

namespace {

// Homology representatives for (C_{*,t}, b) at s: columns of Zh are cycles
// independent modulo the boundaries Bd (a column basis).
struct HomologyBasis {
  QMatrix Zh;
  QMatrix Bd;
};

HomologyBasis homology_basis(const SparseMatrix& b_s, const SparseMatrix& b_next, std::size_t dim) {
  const QMatrix Z = b_s.rows() == 0 ? QMatrix::identity(dim) : nullspace(to_dense(b_s));
  const QMatrix Bd = column_space(to_dense(b_next));
  QMatrix joined = hconcat(Bd, Z);
  const auto pivots = rref(joined);
  std::vector<std::size_t> pick;
  for (auto p : pivots) {
    if (p >= Bd.cols) pick.push_back(p - Bd.cols);
  }
  QMatrix Zh(dim, pick.size());
  for (std::size_t k = 0; k < pick.size(); ++k) {
    for (std::size_t i = 0; i < dim; ++i) Zh(i, k) = Z(i, pick[k]);
  }
  return {Zh, Bd};
}

QMatrix induced_map(const HomologyBasis& hb, const QMatrix& psi) {
  const std::size_t h = hb.Zh.cols;
  const QMatrix image = psi * hb.Zh;
  const auto sol = solve(hconcat(hb.Zh, hb.Bd), image);
  if (!sol) throw InputError("operator does not preserve cycles modulo boundaries");
  QMatrix A(h, h);
  for (std::size_t i = 0; i < h; ++i) {
    for (std::size_t j = 0; j < h; ++j) A(i, j) = (*sol)(i, j);
  }
  return A;
}

std::size_t kernel_dim(const QMatrix& M) { return M.cols - rank(M); }

}  // namespace

AdamsReport adams_report(const HodgeData& E, const std::vector<int>& ks) {
  const HochschildComplex& H = E.complex();
  const Ring Q = Ring::rationals();
  AdamsReport out;
  out.ok = true;
  for (int t : H.internal_degrees()) {
    for (int s = 0; s < E.s_max(); ++s) {
      const auto here = H.slice(s, t);
      if (here.empty()) continue;
      const auto below = s >= 1 ? H.slice(s - 1, t) : std::vector<std::size_t>{};
      const auto above = H.slice(s + 1, t);
      const SparseMatrix b_s = s >= 1 ? restrict_matrix(H.b(s), below, here) : SparseMatrix(0, here.size());
      const SparseMatrix b_next = restrict_matrix(H.b(s + 1), here, above);
      const std::size_t r_s = here.size();
      const std::size_t rank_b = matrix_rank(b_s, Q);
      const std::size_t rank_next = matrix_rank(b_next, Q);
      const std::size_t hh = r_s - rank_b - rank_next;
      if (hh == 0) continue;

      HodgeClassReport rep;
      rep.s = s;
      rep.t = t;
      rep.total = t - s;
      rep.rank = hh;
      for (int i = 0; i <= s; ++i) {
        const SparseMatrix e_here = restrict_matrix(E.idempotent(s, i), here, here);
        const SparseMatrix e_above = restrict_matrix(E.idempotent(s + 1, i), above, above);
        const auto piece = static_cast<std::int64_t>(matrix_rank(e_here, Q)) -
                           static_cast<std::int64_t>(matrix_rank(b_s * e_here, Q)) -
                           static_cast<std::int64_t>(matrix_rank(b_next * e_above, Q));
        if (piece < 0) throw InputError("b does not preserve the Hodge pieces");
        rep.pieces.push_back(static_cast<std::size_t>(piece));
      }
      const auto hb = homology_basis(b_s, b_next, r_s);
      rep.spectrum_ok = true;
      for (int k : ks) {
        const QMatrix A = induced_map(hb, to_dense(restrict_matrix(E.adams(s, k), here, here)));
        std::vector<std::size_t> mult;
        std::size_t seen = 0;
        for (int i = 0; i <= s; ++i) {
          const QMatrix shifted = A - mpq_class(ipow(k, i)) * QMatrix::identity(hh);
          mult.push_back(kernel_dim(shifted));
          seen += mult.back();
        }
        // with k = 1 every piece shares the eigenvalue 1
        if (k == 1) {
          rep.spectrum_ok = rep.spectrum_ok && A == QMatrix::identity(hh);
        } else {
          rep.spectrum_ok = rep.spectrum_ok && seen == hh && mult == rep.pieces;
        }
        rep.eigen[k] = std::move(mult);
      }
      if (std::accumulate(rep.pieces.begin(), rep.pieces.end(), std::size_t{0}) != hh) rep.spectrum_ok = false;
      out.ok = out.ok && rep.spectrum_ok;

      std::map<int, QMatrix> induced;
      for (int k : {1, 2, 3, 4, 6, 9}) {
        induced[k] = induced_map(hb, to_dense(restrict_matrix(E.adams(s, k), here, here)));
      }
      for (int k : {1, 2, 3}) {
        for (int l : {1, 2, 3}) {
          out.multiplicative.expect(induced[k] * induced[l] == induced[k * l],
                                    "psi^" + std::to_string(k) + " psi^" + std::to_string(l) + " at (s=" +
                                        std::to_string(s) + ", t=" + std::to_string(t) + ")");
        }
      }
      out.classes.push_back(std::move(rep));
    }
  }
  out.ok = out.ok && out.multiplicative.pass;
  return out;
}

}  // namespace cyclotome
