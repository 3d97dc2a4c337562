#pragma once

// Exact dense linear algebra over the rationals.
//
// Every subspace is kept in reduced row-echelon form, so two Subspace values
// span the same space exactly when they compare equal.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace nilmul {

using Rational = mpq_class;

/// Parses "p/q" or "p" (optionally signed). Throws std::invalid_argument.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

/// num/den in lowest terms. mpq_class(num, den) alone does not reduce.
Rational ratio(long num, long den);

/// Sparse vector: (index, value) pairs with strictly increasing indices and
/// nonzero values.
using SparseVector = std::vector<std::pair<std::size_t, Rational>>;

std::vector<Rational> to_dense(const SparseVector& v, std::size_t n);
SparseVector to_sparse(std::span<const Rational> v);
bool is_zero(std::span<const Rational> v);

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<std::vector<Rational>>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  std::span<Rational> row(std::size_t r) { return {entries_.data() + r * cols_, cols_}; }
  std::span<const Rational> row(std::size_t r) const { return {entries_.data() + r * cols_, cols_}; }

  void append_row(std::span<const Rational> values);
  /// Reduces every entry to lowest terms.
  void canonicalize();
  Matrix transpose() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

struct RowEchelon {
  Matrix reduced;  // zero rows are dropped
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

RowEchelon rref(Matrix m);

/// A subspace of Q^ambient_dim, stored as its RREF basis.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient_dim = 0);

  static Subspace span(const Matrix& generators);
  static Subspace span(std::size_t ambient_dim, const std::vector<SparseVector>& generators);
  static Subspace full(std::size_t n);
  static Subspace coordinate(std::size_t n, std::span<const std::size_t> indices);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  bool is_zero() const { return dim() == 0; }
  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// v minus its component in this subspace along the pivot coordinates;
  /// zero at every pivot column, and zero overall iff v lies in the subspace.
  std::vector<Rational> reduce(std::span<const Rational> v) const;
  bool contains(std::span<const Rational> v) const;
  bool contains(const Subspace& other) const;

  /// Coordinates of a member vector with respect to the RREF basis.
  std::vector<Rational> coordinates(std::span<const Rational> v) const;

  /// Indices 0..ambient-1 that are not pivots.
  std::vector<std::size_t> non_pivots() const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  std::size_t ambient_;
  Matrix basis_;
  std::vector<std::size_t> pivots_;

  friend class EchelonBuilder;
};

Subspace kernel(const Matrix& m);
Subspace sum(const Subspace& u, const Subspace& w);
Subspace intersect(const Subspace& u, const Subspace& w);

/// Intersection with the coordinate subspace spanned by e_start, e_start+1, ...
Subspace intersect_tail(const Subspace& u, std::size_t start);

class NotContained : public std::domain_error {
 public:
  NotContained(std::string what, std::vector<Rational> witness)
      : std::domain_error(std::move(what)), witness_(std::move(witness)) {}
  const std::vector<Rational>& witness() const { return witness_; }

 private:
  std::vector<Rational> witness_;
};

/// dim(u / w). Throws NotContained carrying a basis vector of w outside u.
std::size_t quotient_dim(const Subspace& u, const Subspace& w);

/// Incremental row-echelon form over sparse rows, for spans in large ambient
/// spaces. Rows are kept normalised (leading entry 1) but not fully reduced
/// until finish().
class EchelonBuilder {
 public:
  explicit EchelonBuilder(std::size_t ambient_dim);
  explicit EchelonBuilder(const Subspace& start);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t rank() const { return rows_.size(); }

  /// Returns true when v was independent of the current rows.
  bool insert(const SparseVector& v);
  bool insert(std::span<const Rational> v);

  /// Projection along the current span onto the non-pivot coordinates.
  SparseVector reduce(const SparseVector& v) const;
  bool contains(const SparseVector& v) const { return reduce(v).empty(); }

  bool is_pivot(std::size_t col) const { return pivot_row_[col] != npos; }
  std::vector<std::size_t> pivots() const;
  std::vector<std::size_t> non_pivots() const;

  /// Rows in insertion order; each row's first entry is its pivot.
  const std::vector<SparseVector>& rows() const { return rows_; }

  Subspace finish() const;

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  void reduce_dense(std::vector<Rational>& acc, std::size_t from) const;

  std::size_t ambient_;
  std::vector<SparseVector> rows_;
  std::vector<std::size_t> pivot_row_;
};

}  // namespace nilmul
