#include "cyclotome/sparse_matrix.hpp"

#include <algorithm>
#include <map>

#include "cyclotome/error.hpp"

namespace cyclotome {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

}  // namespace

Ring Ring::prime_field(std::uint32_t p) {
  if (!is_prime(p)) throw InputError(std::to_string(p) + " is not prime");
  return {Kind::Fp, p};
}

Ring Ring::parse(const std::string& s) {
  if (s == "Z") return integers();
  if (s == "Q") return rationals();
  if (s.rfind("Fp:", 0) == 0) {
    const std::string digits = s.substr(3);
    if (digits.empty() || digits.size() > 9 || !std::all_of(digits.begin(), digits.end(), ::isdigit)) {
      throw InputError("bad prime in ring '" + s + "'");
    }
    return prime_field(static_cast<std::uint32_t>(std::stoul(digits)));
  }
  throw InputError("unknown ring '" + s + "' (expected Z, Q or Fp:P)");
}

std::string Ring::to_string() const {
  switch (kind) {
    case Kind::Z: return "Z";
    case Kind::Q: return "Q";
    case Kind::Fp: return "Fp:" + std::to_string(p);
  }
  return "?";
}

mpq_class Ring::reduce(const mpq_class& v) const {
  if (kind != Kind::Fp) return v;
  const mpz_class P(p);
  mpz_class num = v.get_num() % P;
  mpz_class den = v.get_den() % P;
  if (den == 0) throw InputError("denominator is not invertible in " + to_string());
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), P.get_mpz_t());
  mpz_class r = (num * inv) % P;
  if (r < 0) r += P;
  return mpq_class(r);
}

std::size_t SparseMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& c : columns_) n += c.size();
  return n;
}

void SparseMatrix::add(std::size_t r, std::size_t c, const mpq_class& v) {
  if (r >= rows_ || c >= columns_.size()) throw InputError("matrix index out of range");
  if (v == 0) return;
  auto& col = columns_[c];
  auto it = std::lower_bound(col.begin(), col.end(), r, [](const Entry& e, std::size_t row) { return e.first < row; });
  if (it != col.end() && it->first == r) {
    it->second += v;
    if (it->second == 0) col.erase(it);
  } else {
    col.insert(it, {r, v});
  }
}

mpq_class SparseMatrix::at(std::size_t r, std::size_t c) const {
  const auto& col = columns_.at(c);
  auto it = std::lower_bound(col.begin(), col.end(), r, [](const Entry& e, std::size_t row) { return e.first < row; });
  if (it != col.end() && it->first == r) return it->second;
  return 0;
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix T(cols(), rows_);
  for (std::size_t c = 0; c < cols(); ++c) {
    for (const auto& [r, v] : columns_[c]) T.columns_[r].emplace_back(c, v);  // c increases, rows stay sorted
  }
  return T;
}

bool SparseMatrix::is_zero() const {
  return std::all_of(columns_.begin(), columns_.end(), [](const Column& c) { return c.empty(); });
}

bool SparseMatrix::is_integral() const {
  for (const auto& c : columns_) {
    for (const auto& e : c) {
      if (e.second.get_den() != 1) return false;
    }
  }
  return true;
}

SparseMatrix SparseMatrix::identity(std::size_t n) {
  SparseMatrix I(n, n);
  for (std::size_t i = 0; i < n; ++i) I.columns_[i].emplace_back(i, 1);
  return I;
}

SparseMatrix operator*(const SparseMatrix& A, const SparseMatrix& B) {
  if (A.cols() != B.rows()) throw InputError("matrix product dimension mismatch");
  SparseMatrix C(A.rows(), B.cols());
  for (std::size_t j = 0; j < B.cols(); ++j) {
    std::map<std::size_t, mpq_class> acc;
    for (const auto& [k, b] : B.columns_[j]) {
      for (const auto& [i, a] : A.columns_[k]) acc[i] += a * b;
    }
    for (auto& [i, v] : acc) {
      if (v != 0) C.columns_[j].emplace_back(i, std::move(v));
    }
  }
  return C;
}

namespace {

SparseMatrix combine(const SparseMatrix& A, const SparseMatrix& B, int sign) {
  if (A.rows() != B.rows() || A.cols() != B.cols()) throw InputError("matrix sum dimension mismatch");
  SparseMatrix C(A.rows(), A.cols());
  for (std::size_t j = 0; j < A.cols(); ++j) {
    std::map<std::size_t, mpq_class> acc;
    for (const auto& [i, a] : A.column(j)) acc[i] += a;
    for (const auto& [i, b] : B.column(j)) acc[i] += sign * b;
    for (auto& [i, v] : acc) {
      if (v != 0) C.column(j).emplace_back(i, std::move(v));
    }
  }
  return C;
}

}  // namespace

SparseMatrix operator+(const SparseMatrix& A, const SparseMatrix& B) { return combine(A, B, 1); }
SparseMatrix operator-(const SparseMatrix& A, const SparseMatrix& B) { return combine(A, B, -1); }

SparseMatrix operator*(const mpq_class& s, const SparseMatrix& A) {
  SparseMatrix C(A.rows(), A.cols());
  if (s == 0) return C;
  for (std::size_t j = 0; j < A.cols(); ++j) {
    for (const auto& [i, a] : A.columns_[j]) C.columns_[j].emplace_back(i, s * a);
  }
  return C;
}

bool operator==(const SparseMatrix& A, const SparseMatrix& B) {
  return A.rows_ == B.rows_ && A.columns_ == B.columns_;
}

SparseMatrix reduce_into(const SparseMatrix& M, const Ring& R) {
  if (R.kind != Ring::Kind::Fp) return M;
  SparseMatrix out(M.rows(), M.cols());
  for (std::size_t j = 0; j < M.cols(); ++j) {
    for (const auto& [i, v] : M.column(j)) {
      mpq_class r = R.reduce(v);
      if (r != 0) out.column(j).emplace_back(i, std::move(r));
    }
  }
  return out;
}

bool equal_over(const SparseMatrix& A, const SparseMatrix& B, const Ring& R) {
  return reduce_into(A, R) == reduce_into(B, R);
}

SparseMatrix restrict_matrix(const SparseMatrix& M, const std::vector<std::size_t>& rows,
                             const std::vector<std::size_t>& cols) {
  std::vector<std::int64_t> pos(M.rows(), -1);
  for (std::size_t k = 0; k < rows.size(); ++k) pos[rows[k]] = static_cast<std::int64_t>(k);
  SparseMatrix out(rows.size(), cols.size());
  for (std::size_t k = 0; k < cols.size(); ++k) {
    for (const auto& [i, v] : M.column(cols[k])) {
      if (pos[i] < 0) throw InputError("operator does not preserve the selected basis");
      out.column(k).emplace_back(static_cast<std::size_t>(pos[i]), v);
    }
  }
  return out;
}

}  // namespace cyclotome
