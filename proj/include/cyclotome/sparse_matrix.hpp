#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace cyclotome {

/// Coefficient ring of a computation: the integers, the rationals or F_p.
struct Ring {
  enum class Kind { Z, Q, Fp };
  Kind kind = Kind::Q;
  std::uint32_t p = 0;

  static Ring integers() { return {Kind::Z, 0}; }
  static Ring rationals() { return {Kind::Q, 0}; }
  static Ring prime_field(std::uint32_t p);
  /// "Z", "Q" or "Fp:P".
  static Ring parse(const std::string& s);

  bool is_field() const { return kind != Kind::Z; }
  std::string to_string() const;
  /// Reduces an exact rational into this ring (F_p needs a unit denominator).
  mpq_class reduce(const mpq_class& v) const;

  friend bool operator==(const Ring&, const Ring&) = default;
};

/// Column-major sparse matrix with exact rational entries.  Each column keeps
/// its nonzero entries sorted by row, which makes every traversal order
/// deterministic.
class SparseMatrix {
 public:
  using Entry = std::pair<std::size_t, mpq_class>;
  using Column = std::vector<Entry>;

  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return columns_.size(); }
  std::size_t nonzeros() const;

  /// Adds v to entry (r, c).
  void add(std::size_t r, std::size_t c, const mpq_class& v);
  mpq_class at(std::size_t r, std::size_t c) const;
  const Column& column(std::size_t c) const { return columns_[c]; }
  Column& column(std::size_t c) { return columns_[c]; }

  SparseMatrix transpose() const;
  bool is_zero() const;
  /// True when every entry is an integer.
  bool is_integral() const;

  static SparseMatrix identity(std::size_t n);

  friend SparseMatrix operator*(const SparseMatrix& A, const SparseMatrix& B);
  friend SparseMatrix operator+(const SparseMatrix& A, const SparseMatrix& B);
  friend SparseMatrix operator-(const SparseMatrix& A, const SparseMatrix& B);
  friend SparseMatrix operator*(const mpq_class& s, const SparseMatrix& A);
  friend bool operator==(const SparseMatrix& A, const SparseMatrix& B);

 private:
  std::size_t rows_ = 0;
  std::vector<Column> columns_;
};

/// Entries reduced into the ring; entries that become zero are dropped.
SparseMatrix reduce_into(const SparseMatrix& M, const Ring& R);

/// The block of M on the given rows and columns.  Throws InputError when a
/// selected column has an entry outside the selected rows, i.e. when the
/// operator does not preserve the chosen sub-basis.
SparseMatrix restrict_matrix(const SparseMatrix& M, const std::vector<std::size_t>& rows,
                             const std::vector<std::size_t>& cols);

/// Equality after reduction into the ring.
bool equal_over(const SparseMatrix& A, const SparseMatrix& B, const Ring& R);

}  // namespace cyclotome
