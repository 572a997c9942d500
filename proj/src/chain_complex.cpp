#include "cyclotome/chain_complex.hpp"

#include <algorithm>

#include "cyclotome/error.hpp"
#include "cyclotome/smith.hpp"

namespace cyclotome {

void ChainComplex::validate() const {
  if (d.size() != ranks.size()) throw InputError("one differential per degree is required");
  for (std::size_t n = 0; n < ranks.size(); ++n) {
    const std::size_t rows = n == 0 ? 0 : ranks[n - 1];
    if (d[n].rows() != rows || d[n].cols() != ranks[n]) {
      throw InputError("differential in degree " + std::to_string(n) + " has the wrong shape");
    }
    if (ring.kind == Ring::Kind::Z && !d[n].is_integral()) {
      throw InputError("differential in degree " + std::to_string(n) + " is not integral");
    }
  }
}

CheckResult ChainComplex::check_d_squared() const {
  CheckResult res;
  for (std::size_t n = 2; n < d.size(); ++n) {
    const SparseMatrix dd = reduce_into(d[n - 1] * d[n], ring);
    res.expect(dd.is_zero(), "d o d != 0 from degree " + std::to_string(n));
  }
  res.evidence["degrees"] = ranks.size();
  return res;
}

std::vector<std::size_t> HomologyTable::ranks() const {
  std::vector<std::size_t> out;
  for (const auto& g : groups) out.push_back(g.rank);
  return out;
}

ChainComplex normalized_chains(const SimplicialSet& X, const Ring& R, int N, bool normalized,
                               int nondegenerate_bound) {
  if (N < 0) throw InputError("chain truncation must be non-negative");
  X.require_level(N);
  ChainComplex C;
  C.ring = R;
  std::vector<std::vector<ElementId>> basis(static_cast<std::size_t>(N) + 1);
  for (int n = 0; n <= N; ++n) {
    for (ElementId x : X.elements(n)) {
      if (!normalized || !X.is_degenerate(n, x)) basis[static_cast<std::size_t>(n)].push_back(x);
    }
    C.ranks.push_back(basis[static_cast<std::size_t>(n)].size());
    std::vector<std::string> labels;
    for (ElementId x : basis[static_cast<std::size_t>(n)]) labels.push_back(X.describe(n, x));
    C.labels.push_back(std::move(labels));
  }
  C.d.emplace_back(0, C.ranks[0]);
  for (int n = 1; n <= N; ++n) {
    const auto& src = basis[static_cast<std::size_t>(n)];
    const auto& dst = basis[static_cast<std::size_t>(n) - 1];
    SparseMatrix D(dst.size(), src.size());
    for (std::size_t j = 0; j < src.size(); ++j) {
      for (int i = 0; i <= n; ++i) {
        const ElementId y = X.face(n, i, src[j]);
        auto it = std::lower_bound(dst.begin(), dst.end(), y);
        if (it == dst.end() || *it != y) continue;  // degenerate faces vanish
        D.add(static_cast<std::size_t>(it - dst.begin()), j, (i % 2 == 0) ? 1 : -1);
      }
    }
    C.d.push_back(reduce_into(D, R));
  }
  C.complete = normalized && nondegenerate_bound >= 0 && nondegenerate_bound <= N;
  C.valid_through = C.complete ? N : N - 1;
  return C;
}

HomologyTable homology(const ChainComplex& C, int max_degree, KernelMode mode) {
  C.validate();
  HomologyTable H;
  H.ring = C.ring;
  if (max_degree < 0) max_degree = C.valid_through;
  if (max_degree > C.valid_through) {
    throw RangeError("homology requested through degree " + std::to_string(max_degree) +
                     " but the complex is only exact through degree " + std::to_string(C.valid_through));
  }
  H.valid_through = max_degree;
  const int top = C.top();
  // rank of d_n for n = 0..max_degree+1 (d beyond the top vanishes)
  const int count = std::min(max_degree + 1, top) + 1;
  std::vector<std::size_t> rk(static_cast<std::size_t>(max_degree) + 2, 0);
  std::vector<std::vector<mpz_class>> factors(static_cast<std::size_t>(max_degree) + 2);
#pragma omp parallel for schedule(dynamic, 1)
  for (int n = 1; n < count; ++n) {
    const auto& D = C.d[static_cast<std::size_t>(n)];
    if (C.ring.kind == Ring::Kind::Z) {
      factors[static_cast<std::size_t>(n)] = invariant_factors(D);
      rk[static_cast<std::size_t>(n)] = factors[static_cast<std::size_t>(n)].size();
    } else {
      rk[static_cast<std::size_t>(n)] = matrix_rank(D, C.ring, mode);
    }
  }
  for (int n = 0; n <= max_degree; ++n) {
    HomologyGroup g;
    g.degree = n;
    const std::size_t cn = n <= top ? C.ranks[static_cast<std::size_t>(n)] : 0;
    g.rank = cn - rk[static_cast<std::size_t>(n)] - rk[static_cast<std::size_t>(n) + 1];
    for (const auto& f : factors[static_cast<std::size_t>(n) + 1]) {
      if (f > 1) g.torsion.push_back(f.get_str());
    }
    H.groups.push_back(std::move(g));
  }
  return H;
}

EulerCharacteristic euler_characteristic(const ChainComplex& C) {
  EulerCharacteristic e;
  for (std::size_t n = 0; n < C.ranks.size(); ++n) {
    e.value += (n % 2 == 0 ? 1 : -1) * static_cast<long long>(C.ranks[n]);
  }
  e.certain = C.complete;
  return e;
}

CochainComplex dual_complex(const ChainComplex& C) {
  if (!C.ring.is_field()) throw InputError("the linear dual needs field coefficients");
  C.validate();
  CochainComplex D;
  D.ring = C.ring;
  D.ranks = C.ranks;
  for (std::size_t n = 0; n < C.ranks.size(); ++n) {
    if (n + 1 < C.ranks.size()) {
      D.delta.push_back(C.d[n + 1].transpose());
    } else {
      D.delta.emplace_back(0, C.ranks[n]);
    }
  }
  D.valid_through = C.valid_through;
  return D;
}

std::vector<std::size_t> cohomology_ranks(const CochainComplex& D, KernelMode mode) {
  const int top = static_cast<int>(D.ranks.size()) - 1;
  const int last = std::min(D.valid_through, top);
  std::vector<std::size_t> rk(D.delta.size(), 0);
#pragma omp parallel for schedule(dynamic, 1)
  for (int n = 0; n <= std::min(last, top - 1); ++n) {
    rk[static_cast<std::size_t>(n)] = matrix_rank(D.delta[static_cast<std::size_t>(n)], D.ring, mode);
  }
  std::vector<std::size_t> out;
  for (int n = 0; n <= last; ++n) {
    const std::size_t below = n > 0 ? rk[static_cast<std::size_t>(n) - 1] : 0;
    out.push_back(D.ranks[static_cast<std::size_t>(n)] - rk[static_cast<std::size_t>(n)] - below);
  }
  return out;
}

}  // namespace cyclotome
