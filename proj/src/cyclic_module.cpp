#include "cyclotome/cyclic_module.hpp"

#include <algorithm>
#include <functional>

#include "cyclotome/error.hpp"

namespace cyclotome {

namespace {

std::size_t index_in(const std::vector<ElementId>& basis, ElementId x) {
  auto it = std::lower_bound(basis.begin(), basis.end(), x);
  if (it == basis.end() || *it != x) throw InputError("operator leaves the level");
  return static_cast<std::size_t>(it - basis.begin());
}

SparseMatrix map_matrix(const std::vector<ElementId>& src, const std::vector<ElementId>& dst,
                        const std::function<ElementId(ElementId)>& f) {
  SparseMatrix M(dst.size(), src.size());
  for (std::size_t j = 0; j < src.size(); ++j) M.column(j).emplace_back(index_in(dst, f(src[j])), 1);
  return M;
}

}  // namespace

CheckResult CyclicModule::check_identities() const {
  CheckResult res;
  const int N = truncation();
  auto eq = [this](const SparseMatrix& a, const SparseMatrix& b) { return equal_over(a, b, ring); };
  auto where = [](const std::string& what, int n, int i, int j) {
    return what + " at level " + std::to_string(n) + " (i=" + std::to_string(i) + ", j=" + std::to_string(j) + ")";
  };
  for (int n = 2; n <= N; ++n) {
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        // d_i d_j = d_{j-1} d_i for i < j
        res.expect(eq(faces[n - 1][i] * faces[n][j], faces[n - 1][j - 1] * faces[n][i]), where("d_i d_j", n, i, j));
      }
    }
  }
  for (int n = 1; n <= N; ++n) {
    for (int j = 0; j < n; ++j) {
      const auto& s = degeneracies[n][j];
      for (int i = 0; i <= n; ++i) {
        const SparseMatrix ds = faces[n][i] * s;
        if (i == j || i == j + 1) {
          res.expect(eq(ds, SparseMatrix::identity(ranks[n - 1])), where("d_i s_j = 1", n, i, j));
        } else if (n >= 2 && i < j) {
          res.expect(eq(ds, degeneracies[n - 1][j - 1] * faces[n - 1][i]), where("d_i s_j", n, i, j));
        } else if (n >= 2) {
          res.expect(eq(ds, degeneracies[n - 1][j] * faces[n - 1][i - 1]), where("d_i s_j", n, i, j));
        }
      }
    }
  }
  for (int n = 2; n <= N; ++n) {
    for (int i = 0; i <= n - 2; ++i) {
      for (int j = i; j <= n - 2; ++j) {
        // s_i s_j = s_{j+1} s_i for i <= j
        res.expect(eq(degeneracies[n][i] * degeneracies[n - 1][j], degeneracies[n][j + 1] * degeneracies[n - 1][i]),
                   where("s_i s_j", n, i, j));
      }
    }
  }
  if (has_cycle()) {
    for (int n = 0; n <= N; ++n) {
      SparseMatrix p = SparseMatrix::identity(ranks[n]);
      for (int k = 0; k <= n; ++k) p = cycle[n] * p;
      res.expect(eq(p, SparseMatrix::identity(ranks[n])), where("t^{n+1} = 1", n, 0, 0));
      for (int i = 1; n > 0 && i <= n; ++i) {
        res.expect(eq(faces[n][i] * cycle[n], cycle[n - 1] * faces[n][i - 1]), where("d_i t = t d_{i-1}", n, i, 0));
      }
      for (int i = 1; n > 0 && i < n; ++i) {
        res.expect(eq(degeneracies[n][i] * cycle[n - 1], cycle[n] * degeneracies[n][i - 1]),
                   where("s_i t = t s_{i-1}", n, i, 0));
      }
    }
  }
  return res;
}

CyclicModule linearize(const SimplicialSet& X, const Ring& R, int N) {
  X.require_level(N);
  CyclicModule M;
  M.ring = R;
  const auto* cyc = dynamic_cast<const CyclicSet*>(&X);
  std::vector<std::vector<ElementId>> basis;
  for (int n = 0; n <= N; ++n) {
    basis.push_back(X.elements(n));
    M.ranks.push_back(basis.back().size());
  }
  for (int n = 0; n <= N; ++n) {
    const auto& cur = basis[static_cast<std::size_t>(n)];
    std::vector<SparseMatrix> fs, ss;
    for (int i = 0; n > 0 && i <= n; ++i) {
      fs.push_back(map_matrix(cur, basis[static_cast<std::size_t>(n) - 1], [&](ElementId x) { return X.face(n, i, x); }));
    }
    for (int i = 0; n > 0 && i < n; ++i) {
      ss.push_back(map_matrix(basis[static_cast<std::size_t>(n) - 1], cur,
                              [&](ElementId x) { return X.degeneracy(n - 1, i, x); }));
    }
    M.faces.push_back(std::move(fs));
    M.degeneracies.push_back(std::move(ss));
    if (cyc) M.cycle.push_back(map_matrix(cur, cur, [&](ElementId x) { return cyc->cycle(n, x); }));
  }
  return M;
}

SubdividedModule linearize_subdivision(const Subdivision& S, const Ring& R, int N) {
  SubdividedModule out;
  out.r = S.r();
  out.module = linearize(S, R, N);
  for (int k = 0; k <= N; ++k) {
    const auto basis = S.elements(k);
    const int level = S.source_level(k);
    out.module.cycle.push_back(map_matrix(basis, basis, [&](ElementId x) { return S.base().cycle(level, x); }));
    out.group_generator.push_back(map_matrix(basis, basis, [&](ElementId x) { return S.group_generator(k, x); }));
  }
  return out;
}

CyclicModule basis_fixed_points(const SubdividedModule& M) {
  const CyclicModule& A = M.module;
  std::vector<std::vector<std::size_t>> fixed;
  for (std::size_t n = 0; n < A.ranks.size(); ++n) {
    std::vector<std::size_t> f;
    const auto& g = M.group_generator[n];
    for (std::size_t j = 0; j < g.cols(); ++j) {
      if (g.column(j).size() == 1 && g.column(j)[0].first == j && g.column(j)[0].second == 1) f.push_back(j);
    }
    fixed.push_back(std::move(f));
  }
  CyclicModule F;
  F.ring = A.ring;
  for (std::size_t n = 0; n < A.ranks.size(); ++n) {
    F.ranks.push_back(fixed[n].size());
    std::vector<SparseMatrix> fs, ss;
    for (const auto& d : A.faces[n]) fs.push_back(restrict_matrix(d, fixed[n - 1], fixed[n]));
    for (const auto& s : A.degeneracies[n]) ss.push_back(restrict_matrix(s, fixed[n], fixed[n - 1]));
    F.faces.push_back(std::move(fs));
    F.degeneracies.push_back(std::move(ss));
    if (A.has_cycle()) F.cycle.push_back(restrict_matrix(A.cycle[n], fixed[n], fixed[n]));
  }
  return F;
}

ChainComplex moore_complex(const CyclicModule& M) {
  ChainComplex C;
  C.ring = M.ring;
  C.ranks = M.ranks;
  C.d.emplace_back(0, M.ranks.empty() ? 0 : M.ranks[0]);
  for (std::size_t n = 1; n < M.ranks.size(); ++n) {
    SparseMatrix D(M.ranks[n - 1], M.ranks[n]);
    for (std::size_t i = 0; i <= n; ++i) D = D + mpq_class(i % 2 == 0 ? 1 : -1) * M.faces[n][i];
    C.d.push_back(reduce_into(D, M.ring));
  }
  C.valid_through = M.truncation() - 1;
  return C;
}

bool same_module(const CyclicModule& A, const CyclicModule& B) {
  if (!(A.ring == B.ring) || A.ranks != B.ranks || A.has_cycle() != B.has_cycle()) return false;
  for (std::size_t n = 0; n < A.ranks.size(); ++n) {
    if (A.faces[n].size() != B.faces[n].size() || A.degeneracies[n].size() != B.degeneracies[n].size()) return false;
    for (std::size_t i = 0; i < A.faces[n].size(); ++i) {
      if (!equal_over(A.faces[n][i], B.faces[n][i], A.ring)) return false;
    }
    for (std::size_t i = 0; i < A.degeneracies[n].size(); ++i) {
      if (!equal_over(A.degeneracies[n][i], B.degeneracies[n][i], A.ring)) return false;
    }
    if (A.has_cycle() && !equal_over(A.cycle[n], B.cycle[n], A.ring)) return false;
  }
  return true;
}

}  // namespace cyclotome
