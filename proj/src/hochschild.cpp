#include "cyclotome/hochschild.hpp"

#include <algorithm>
#include <set>

#include "cyclotome/error.hpp"

namespace cyclotome {

namespace {

void accumulate(std::map<Word, mpq_class>& c, const Word& w, const mpq_class& v) {
  if (v == 0) return;
  auto& x = c[w];
  x += v;
  if (x == 0) c.erase(w);
}

int koszul_parity(const GradedAlgebra& A, const Word& w) {
  // moving the last letter past all the others
  const int last = A.degrees[static_cast<std::size_t>(w.back())];
  if (last % 2 == 0) return 0;
  int rest = 0;
  for (std::size_t j = 0; j + 1 < w.size(); ++j) rest += A.degrees[static_cast<std::size_t>(w[j])];
  return rest % 2;
}

}  // namespace

HochschildComplex::HochschildComplex(GradedAlgebra A, int s_max, bool normalized, std::size_t cap)
    : A_(std::move(A)), s_max_(s_max), normalized_(normalized) {
  A_.validate();
  if (s_max_ < 0) throw InputError("simplicial bound must be non-negative");
  const int dim = static_cast<int>(A_.dim());
  std::vector<int> letters;
  for (int a = 0; a < dim; ++a) {
    if (!normalized_ || a != A_.unit) letters.push_back(a);
  }
  std::size_t total = 0;
  for (int s = 0; s <= s_max_; ++s) {
    std::vector<Word> words;
    Word w(static_cast<std::size_t>(s) + 1);
    auto rec = [&](auto&& self, int pos) -> void {
      if (pos > s) {
        if (++total > cap) throw ResourceLimitError("Hochschild complex exceeds the cell cap");
        words.push_back(w);
        return;
      }
      if (pos == 0) {
        for (int a = 0; a < dim; ++a) {
          w[0] = a;
          self(self, 1);
        }
      } else {
        for (int a : letters) {
          w[static_cast<std::size_t>(pos)] = a;
          self(self, pos + 1);
        }
      }
    };
    rec(rec, 0);
    std::map<Word, std::size_t> idx;
    for (std::size_t i = 0; i < words.size(); ++i) idx.emplace(words[i], i);
    basis_.push_back(std::move(words));
    index_.push_back(std::move(idx));
  }
}

int HochschildComplex::internal_degree(const Word& w) const {
  int t = 0;
  for (int a : w) t += A_.degrees[static_cast<std::size_t>(a)];
  return t;
}

std::vector<int> HochschildComplex::internal_degrees() const {
  std::set<int> ts;
  for (const auto& level : basis_) {
    for (const auto& w : level) ts.insert(internal_degree(w));
  }
  return {ts.begin(), ts.end()};
}

std::vector<std::size_t> HochschildComplex::slice(int s, int t) const {
  std::vector<std::size_t> keep;
  const auto& words = basis(s);
  for (std::size_t j = 0; j < words.size(); ++j) {
    if (internal_degree(words[j]) == t) keep.push_back(j);
  }
  return keep;
}

std::size_t HochschildComplex::index_of(int s, const Word& w) const {
  if (s < 0 || s > s_max_) return npos;
  const auto& idx = index_[static_cast<std::size_t>(s)];
  auto it = idx.find(w);
  return it == idx.end() ? npos : it->second;
}

SparseMatrix HochschildComplex::to_matrix(int src, int dst,
                                          const std::function<Combination(const Word&)>& op) const {
  const auto& in = basis(src);
  SparseMatrix M(basis(dst).size(), in.size());
  for (std::size_t j = 0; j < in.size(); ++j) {
    std::map<std::size_t, mpq_class> col;
    for (const auto& [w, c] : op(in[j])) {
      const std::size_t i = index_of(dst, w);
      if (i == npos) {
        if (!normalized_) throw InputError("operator leaves the word basis");
        continue;  // degenerate word, zero in the normalized complex
      }
      col[i] += c;
    }
    for (const auto& [i, c] : col) {
      const mpq_class v = A_.field.reduce(c);
      if (v != 0) M.column(j).emplace_back(i, v);
    }
  }
  return M;
}

HochschildComplex::Combination HochschildComplex::face_of(const Word& w, int i) const {
  const int s = static_cast<int>(w.size()) - 1;
  Combination out;
  if (i < s) {
    for (const auto& [k, c] : A_.mult[static_cast<std::size_t>(w[static_cast<std::size_t>(i)])]
                                     [static_cast<std::size_t>(w[static_cast<std::size_t>(i) + 1])]) {
      Word v(w.begin(), w.begin() + i);
      v.push_back(k);
      v.insert(v.end(), w.begin() + i + 2, w.end());
      accumulate(out, v, c);
    }
  } else {
    const mpq_class sign = koszul_parity(A_, w) ? -1 : 1;
    for (const auto& [k, c] : A_.mult[static_cast<std::size_t>(w.back())][static_cast<std::size_t>(w.front())]) {
      Word v{k};
      v.insert(v.end(), w.begin() + 1, w.end() - 1);
      accumulate(out, v, sign * c);
    }
  }
  return out;
}

HochschildComplex::Combination HochschildComplex::signed_cycle_of(const Word& w) const {
  const int s = static_cast<int>(w.size()) - 1;
  Word v{w.back()};
  v.insert(v.end(), w.begin(), w.end() - 1);
  const int parity = (koszul_parity(A_, w) + s) % 2;
  return {{v, mpq_class(parity ? -1 : 1)}};
}

HochschildComplex::Combination HochschildComplex::apply_signed_cycle(const Combination& c) const {
  Combination out;
  for (const auto& [w, v] : c) {
    for (const auto& [u, e] : signed_cycle_of(w)) accumulate(out, u, v * e);
  }
  return out;
}

SparseMatrix HochschildComplex::face(int s, int i) const {
  if (s < 1 || s > s_max_ || i < 0 || i > s) throw InputError("face index out of range");
  return to_matrix(s, s - 1, [&](const Word& w) { return face_of(w, i); });
}

SparseMatrix HochschildComplex::degeneracy(int s, int i) const {
  if (normalized_) throw InputError("degeneracies live on the un-normalized complex");
  if (s < 1 || s > s_max_ || i < 0 || i >= s) throw InputError("degeneracy index out of range");
  return to_matrix(s - 1, s, [&](const Word& w) {
    Word v = w;
    v.insert(v.begin() + i + 1, A_.unit);
    return Combination{{v, mpq_class(1)}};
  });
}

SparseMatrix HochschildComplex::b(int s) const {
  if (s < 1 || s > s_max_) throw InputError("b index out of range");
  return to_matrix(s, s - 1, [&](const Word& w) {
    Combination out;
    for (int i = 0; i <= s; ++i) {
      const mpq_class sign = i % 2 == 0 ? 1 : -1;
      for (const auto& [v, c] : face_of(w, i)) accumulate(out, v, sign * c);
    }
    return out;
  });
}

SparseMatrix HochschildComplex::cyclic_operator(int s) const {
  if (normalized_) throw InputError("the cyclic operator lives on the un-normalized complex");
  if (s < 0 || s > s_max_) throw InputError("cyclic operator index out of range");
  return to_matrix(s, s, [&](const Word& w) { return signed_cycle_of(w); });
}

SparseMatrix HochschildComplex::rotation(int s) const {
  if (normalized_) throw InputError("the rotation lives on the un-normalized complex");
  if (s < 0 || s > s_max_) throw InputError("rotation index out of range");
  return to_matrix(s, s, [&](const Word& w) {
    Word v{w.back()};
    v.insert(v.end(), w.begin(), w.end() - 1);
    return Combination{{v, mpq_class(koszul_parity(A_, w) ? -1 : 1)}};
  });
}

SparseMatrix HochschildComplex::connes_B(int s) const {
  if (s < 0 || s + 1 > s_max_) throw InputError("B index out of range");
  return to_matrix(s, s + 1, [&](const Word& w) {
    // N = sum of powers of the signed cycle
    Combination orbit{{w, mpq_class(1)}};
    Combination norm = orbit;
    for (int i = 1; i <= s; ++i) {
      orbit = apply_signed_cycle(orbit);
      for (const auto& [v, c] : orbit) accumulate(norm, v, c);
    }
    Combination lifted;
    for (const auto& [v, c] : norm) {
      Word u{A_.unit};
      u.insert(u.end(), v.begin(), v.end());
      accumulate(lifted, u, c);
    }
    Combination out = lifted;
    for (const auto& [v, c] : apply_signed_cycle(lifted)) accumulate(out, v, -c);
    return out;
  });
}

CheckResult HochschildComplex::check_identities() const {
  CheckResult res;
  const Ring& R = A_.field;
  auto zero = [&](const SparseMatrix& M) { return reduce_into(M, R).is_zero(); };
  std::vector<SparseMatrix> bs(static_cast<std::size_t>(s_max_) + 1), Bs(static_cast<std::size_t>(s_max_) + 1);
  for (int s = 1; s <= s_max_; ++s) bs[static_cast<std::size_t>(s)] = b(s);
  for (int s = 0; s + 1 <= s_max_; ++s) Bs[static_cast<std::size_t>(s)] = connes_B(s);
  for (int s = 2; s <= s_max_; ++s) {
    res.expect(zero(bs[s - 1] * bs[s]), "b^2 != 0 at s=" + std::to_string(s));
  }
  for (int s = 0; s + 2 <= s_max_; ++s) {
    res.expect(zero(Bs[s + 1] * Bs[s]), "B^2 != 0 at s=" + std::to_string(s));
  }
  for (int s = 0; s + 1 <= s_max_; ++s) {
    SparseMatrix bB = bs[s + 1] * Bs[s];
    if (s >= 1) bB = bB + Bs[s - 1] * bs[s];
    res.expect(zero(bB), "bB + Bb != 0 at s=" + std::to_string(s));
  }
  if (!normalized_) {
    for (int s = 0; s <= s_max_; ++s) {
      const SparseMatrix t = cyclic_operator(s);
      SparseMatrix p = SparseMatrix::identity(basis(s).size());
      for (int k = 0; k <= s; ++k) p = t * p;
      res.expect(equal_over(p, SparseMatrix::identity(basis(s).size()), R), "t^{s+1} != 1 at s=" + std::to_string(s));
    }
  }
  res.evidence["s_max"] = s_max_;
  res.evidence["normalized"] = normalized_;
  return res;
}

CyclicModule HochschildComplex::unsigned_cyclic_module() const {
  if (normalized_) throw InputError("the cyclic module needs the un-normalized complex");
  CyclicModule M;
  M.ring = A_.field;
  for (int s = 0; s <= s_max_; ++s) {
    M.ranks.push_back(basis(s).size());
    std::vector<SparseMatrix> fs, ss;
    for (int i = 0; s > 0 && i <= s; ++i) fs.push_back(face(s, i));
    for (int i = 0; s > 0 && i < s; ++i) ss.push_back(degeneracy(s, i));
    M.faces.push_back(std::move(fs));
    M.degeneracies.push_back(std::move(ss));
    M.cycle.push_back(rotation(s));
  }
  return M;
}

ChainComplex HochschildComplex::chains(int t) const {
  std::vector<std::vector<std::size_t>> sel;
  for (int s = 0; s <= s_max_; ++s) sel.push_back(slice(s, t));
  ChainComplex C;
  C.ring = A_.field;
  for (int s = 0; s <= s_max_; ++s) {
    const auto& keep = sel[static_cast<std::size_t>(s)];
    C.ranks.push_back(keep.size());
    std::vector<std::string> labels;
    for (std::size_t j : keep) {
      std::string l;
      for (int a : basis(s)[j]) l += (l.empty() ? "" : "|") + A_.names[static_cast<std::size_t>(a)];
      labels.push_back(std::move(l));
    }
    C.labels.push_back(std::move(labels));
    if (s == 0) {
      C.d.emplace_back(0, keep.size());
    } else {
      C.d.push_back(restrict_matrix(b(s), sel[static_cast<std::size_t>(s) - 1], keep));
    }
  }
  // Normalized words of a connective-gap algebra have t >= 2s, and the
  // normalized complex of the ground field stops at s = 0.
  const bool gap = A_.connective_gap() && 2 * (s_max_ + 1) > t;
  C.complete = normalized_ && (gap || A_.dim() == 1);
  C.valid_through = C.complete ? s_max_ : s_max_ - 1;
  return C;
}

ChainComplex HochschildComplex::chains() const {
  ChainComplex C;
  C.ring = A_.field;
  for (int s = 0; s <= s_max_; ++s) {
    C.ranks.push_back(basis(s).size());
    if (s == 0) {
      C.d.emplace_back(0, basis(0).size());
    } else {
      C.d.push_back(b(s));
    }
  }
  C.complete = normalized_ && A_.dim() == 1;
  C.valid_through = C.complete ? s_max_ : s_max_ - 1;
  return C;
}

HHTable hh_total(const GradedAlgebra& A, int total_max, bool normalized, std::size_t cap) {
  if (!A.connective_gap()) {
    throw InputError("total-degree Hochschild homology needs every non-unit generator in degree >= 2");
  }
  if (total_max < 0) throw InputError("total degree bound must be non-negative");
  // A class in bidegree (s, t) with t - s <= D has t >= 2s, hence s <= D and
  // t <= 2D; one extra simplicial level makes those degrees exact.
  const HochschildComplex H(A, total_max + 1, normalized, cap);
  HHTable out;
  out.total_max = total_max;
  for (int d = 0; d <= total_max; ++d) out.by_total[d] = 0;
  for (int t = 0; t <= 2 * total_max; ++t) {
    const ChainComplex C = H.chains(t);
    const int top = std::min(total_max, C.valid_through);
    const auto table = homology(C, top);
    for (const auto& g : table.groups) {
      const int total = t - g.degree;
      if (g.rank == 0 || total < 0 || total > total_max) continue;
      out.entries.push_back({g.degree, t, total, g.rank});
      out.by_total[total] += g.rank;
      out.by_simplicial[g.degree] += g.rank;
    }
  }
  return out;
}

HHTable hh_simplicial(const GradedAlgebra& A, int simplicial_max, bool normalized, std::size_t cap) {
  if (simplicial_max < 0) throw InputError("simplicial bound must be non-negative");
  const HochschildComplex H(A, simplicial_max + 1, normalized, cap);
  HHTable out;
  out.simplicial_max = simplicial_max;
  for (int s = 0; s <= simplicial_max; ++s) out.by_simplicial[s] = 0;
  for (int t : H.internal_degrees()) {
    const ChainComplex C = H.chains(t);
    const auto table = homology(C, std::min(simplicial_max, C.valid_through));
    for (const auto& g : table.groups) {
      if (g.rank == 0) continue;
      out.entries.push_back({g.degree, t, t - g.degree, g.rank});
      out.by_simplicial[g.degree] += g.rank;
      out.by_total[t - g.degree] += g.rank;
    }
  }
  return out;
}

ChainComplex connes_total_complex(const HochschildComplex& H, int n_max) {
  if (!H.normalized()) throw InputError("the b-B complex is built on normalized chains");
  if (n_max < 0 || H.s_max() < n_max + 1) throw InputError("the Hochschild complex is too short for this degree");
  const int top = n_max + 1;
  // Tot_n = sum over p of C_{n-2p}; offsets[n][p] locates each block.
  std::vector<std::vector<std::size_t>> offsets(static_cast<std::size_t>(top) + 1);
  ChainComplex C;
  C.ring = H.algebra().field;
  for (int n = 0; n <= top; ++n) {
    std::size_t size = 0;
    for (int p = 0; 2 * p <= n; ++p) {
      offsets[static_cast<std::size_t>(n)].push_back(size);
      size += H.basis(n - 2 * p).size();
    }
    C.ranks.push_back(size);
  }
  auto place = [](SparseMatrix& D, const SparseMatrix& blk, std::size_t r0, std::size_t c0) {
    for (std::size_t j = 0; j < blk.cols(); ++j) {
      for (const auto& [i, v] : blk.column(j)) D.add(r0 + i, c0 + j, v);
    }
  };
  C.d.emplace_back(0, C.ranks[0]);
  for (int n = 1; n <= top; ++n) {
    SparseMatrix D(C.ranks[static_cast<std::size_t>(n) - 1], C.ranks[static_cast<std::size_t>(n)]);
    const auto& src = offsets[static_cast<std::size_t>(n)];
    const auto& dst = offsets[static_cast<std::size_t>(n) - 1];
    for (int p = 0; 2 * p <= n; ++p) {
      const int s = n - 2 * p;
      if (s >= 1) place(D, H.b(s), dst[static_cast<std::size_t>(p)], src[static_cast<std::size_t>(p)]);
      if (p >= 1) place(D, H.connes_B(s), dst[static_cast<std::size_t>(p) - 1], src[static_cast<std::size_t>(p)]);
    }
    C.d.push_back(reduce_into(D, C.ring));
  }
  C.valid_through = n_max;
  return C;
}

std::vector<std::size_t> hc(const GradedAlgebra& A, int n_max, std::size_t cap) {
  const HochschildComplex H(A, n_max + 1, true, cap);
  return homology(connes_total_complex(H, n_max), n_max).ranks();
}

}  // namespace cyclotome
