#include "cyclotome/kernels.hpp"

#include <cstdint>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cyclotome {

namespace {

struct PrimeField {
  using Value = std::uint64_t;
  std::uint64_t p;

  Value from(const mpq_class& v) const {
    const mpz_class P(static_cast<unsigned long>(p));
    mpz_class num = v.get_num() % P;
    if (num < 0) num += P;
    mpz_class den = v.get_den() % P;
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), P.get_mpz_t());
    return static_cast<Value>(mpz_class(num * inv % P).get_ui());
  }
  bool zero(Value a) const { return a == 0; }
  Value mul(Value a, Value b) const { return a * b % p; }
  Value sub(Value a, Value b) const { return (a + p - b) % p; }
  Value inv(Value a) const {
    Value r = 1, e = p - 2;
    while (e) {
      if (e & 1) r = r * a % p;
      a = a * a % p;
      e >>= 1;
    }
    return r;
  }
};

struct Rationals {
  using Value = mpq_class;
  Value from(const mpq_class& v) const { return v; }
  bool zero(const Value& a) const { return a == 0; }
  Value mul(const Value& a, const Value& b) const { return a * b; }
  Value sub(const Value& a, const Value& b) const { return a - b; }
  Value inv(const Value& a) const { return 1 / a; }
};

template <class F>
using Col = std::vector<std::pair<std::size_t, typename F::Value>>;

template <class F>
std::vector<Col<F>> load(const SparseMatrix& M, const F& f) {
  std::vector<Col<F>> cols(M.cols());
  for (std::size_t j = 0; j < M.cols(); ++j) {
    for (const auto& [i, v] : M.column(j)) {
      auto x = f.from(v);
      if (!f.zero(x)) cols[j].emplace_back(i, std::move(x));
    }
  }
  return cols;
}

/// a <- a - c * b, both sorted by row.
template <class F>
void axpy(const F& f, Col<F>& a, const typename F::Value& c, const Col<F>& b) {
  Col<F> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(std::move(a[i++]));
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, f.sub(typename F::Value(0), f.mul(c, b[j].second)));
      ++j;
    } else {
      auto v = f.sub(a[i].second, f.mul(c, b[j].second));
      if (!f.zero(v)) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  a = std::move(out);
}

/// Reduces col against pivots until its lowest row has no pivot (or it
/// vanishes).  Pivot columns are normalized to have lowest entry 1.
template <class F>
void reduce(const F& f, Col<F>& col, const std::vector<std::int64_t>& pivot_of_row,
            const std::vector<Col<F>>& pivots) {
  while (!col.empty()) {
    const std::int64_t k = pivot_of_row[col.back().first];
    if (k < 0) return;
    const auto c = col.back().second;
    axpy(f, col, c, pivots[static_cast<std::size_t>(k)]);
  }
}

template <class F>
void finalize(const F& f, Col<F>& col, std::size_t j, std::vector<std::int64_t>& pivot_of_row,
              std::vector<Col<F>>& pivots) {
  reduce(f, col, pivot_of_row, pivots);
  if (col.empty()) return;
  const auto s = f.inv(col.back().second);
  for (auto& e : col) e.second = f.mul(e.second, s);
  pivot_of_row[col.back().first] = static_cast<std::int64_t>(j);
  pivots[j] = std::move(col);
}

template <class F>
std::size_t rank_serial_impl(const SparseMatrix& M, const F& f) {
  auto cols = load(M, f);
  std::vector<std::int64_t> pivot_of_row(M.rows(), -1);
  std::vector<Col<F>> pivots(M.cols());
  std::size_t rank = 0;
  for (std::size_t j = 0; j < cols.size(); ++j) {
    finalize(f, cols[j], j, pivot_of_row, pivots);
    rank += !pivots[j].empty();
  }
  return rank;
}

template <class F>
std::size_t rank_parallel_impl(const SparseMatrix& M, const F& f, std::size_t batch) {
  auto cols = load(M, f);
  std::vector<std::int64_t> pivot_of_row(M.rows(), -1);
  std::vector<Col<F>> pivots(M.cols());
  std::size_t rank = 0;
  if (batch == 0) batch = 1;
  for (std::size_t b = 0; b < cols.size(); b += batch) {
    const std::size_t e = std::min(cols.size(), b + batch);
    // Pivots and the pivot table are read-only inside this region.
#pragma omp parallel for schedule(dynamic, 4)
    for (std::int64_t j = static_cast<std::int64_t>(b); j < static_cast<std::int64_t>(e); ++j) {
      reduce(f, cols[static_cast<std::size_t>(j)], pivot_of_row, pivots);
    }
    for (std::size_t j = b; j < e; ++j) {
      finalize(f, cols[j], j, pivot_of_row, pivots);
      rank += !pivots[j].empty();
    }
  }
  return rank;
}

}  // namespace

std::size_t rank_serial(const SparseMatrix& M, const Ring& R) {
  if (R.kind == Ring::Kind::Fp) return rank_serial_impl(M, PrimeField{R.p});
  return rank_serial_impl(M, Rationals{});
}

std::size_t rank_parallel(const SparseMatrix& M, const Ring& R, std::size_t batch) {
  if (R.kind == Ring::Kind::Fp) return rank_parallel_impl(M, PrimeField{R.p}, batch);
  return rank_parallel_impl(M, Rationals{}, batch);
}

std::size_t matrix_rank(const SparseMatrix& M, const Ring& R, KernelMode mode) {
  return mode == KernelMode::Serial ? rank_serial(M, R) : rank_parallel(M, R);
}

}  // namespace cyclotome
