#pragma once

// Finite-dimensional Lie algebras given by exact structure constants.

#include "nilmul/exactlin.hpp"
#include "nilmul/freelie.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace nilmul {

/// Unchecked multiplication table: entry (i, j) holds [e_i, e_j].
struct RawTable {
  std::string name;
  std::vector<std::string> labels;
  std::vector<SparseVector> entries;  // dim * dim, row-major

  explicit RawTable(std::size_t dim = 0, std::string name = {});
  std::size_t dim() const { return labels.size(); }
  SparseVector& at(std::size_t i, std::size_t j) { return entries.at(i * dim() + j); }
  const SparseVector& at(std::size_t i, std::size_t j) const { return entries.at(i * dim() + j); }

  /// Sets [e_i, e_j] = value and [e_j, e_i] = -value.
  void set_antisymmetric(std::size_t i, std::size_t j, const SparseVector& value);
};

class ValidationError : public std::invalid_argument {
 public:
  enum class Kind { Shape, Antisymmetry, Jacobi };

  ValidationError(Kind kind, std::string what, std::array<std::size_t, 3> witness)
      : std::invalid_argument(std::move(what)), kind_(kind), witness_(witness) {}

  Kind kind() const { return kind_; }
  const std::array<std::size_t, 3>& witness() const { return witness_; }

 private:
  Kind kind_;
  std::array<std::size_t, 3> witness_;
};

class LieAlgebra {
 public:
  /// Checks antisymmetry and the Jacobi identity on all basis triples.
  static LieAlgebra validate(RawTable raw);

  const std::string& name() const { return name_; }
  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }

  const SparseVector& bracket(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }
  std::vector<Rational> bracket(std::span<const Rational> x, std::span<const Rational> y) const;

  bool is_abelian() const;
  LieAlgebra renamed(std::string name) const;

 private:
  LieAlgebra() = default;

  std::string name_;
  std::vector<std::string> labels_;
  std::vector<SparseVector> table_;
};

LieAlgebra abelian(std::size_t n);
LieAlgebra heisenberg(std::size_t m);
LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);

/// The free nilpotent algebra as a plain structure-constant algebra.
LieAlgebra as_lie_algebra(const FreeNilpotentAlgebra& f);

/// Applies a change of basis: new e'_i = sum_k change(i, k) e_k.
LieAlgebra change_basis(const LieAlgebra& l, const Matrix& change);

struct SeriesReport {
  std::vector<Subspace> lower_central;  // gamma_1 = L, gamma_2, ..., ending at the stable term
  std::vector<Subspace> upper_central;  // 0, Z(L), Z_2(L), ..., ending at the stable term
  std::optional<std::size_t> nilpotency_class;

  bool nilpotent() const { return nilpotency_class.has_value(); }
  /// gamma_k (k >= 1); stable beyond the computed list.
  const Subspace& lower(std::size_t k) const;
  /// Z_k (k >= 0); stable beyond the computed list.
  const Subspace& upper(std::size_t k) const;
};

SeriesReport series(const LieAlgebra& l);

/// [U, V] as a subspace of L.
Subspace bracket_span(const LieAlgebra& l, const Subspace& u, const Subspace& v);

/// Z_j(L) given Z_{j-1}(L): all x with [x, L] inside prev.
Subspace next_center(const LieAlgebra& l, const Subspace& prev);

class NotAnIdeal : public std::invalid_argument {
 public:
  NotAnIdeal(std::string what, std::size_t ideal_row, std::size_t basis_index)
      : std::invalid_argument(std::move(what)), witness_{ideal_row, basis_index} {}
  const std::array<std::size_t, 2>& witness() const { return witness_; }

 private:
  std::array<std::size_t, 2> witness_;
};

bool is_ideal(const LieAlgebra& l, const Subspace& i);

/// L/I in the coordinates of the non-pivot columns of I.
LieAlgebra quotient(const LieAlgebra& l, const Subspace& ideal);

struct DerivedDimOne {
  std::size_t heisenberg_rank;  // m
  std::size_t abelian_part;     // n - 2m - 1
  friend bool operator==(const DerivedDimOne&, const DerivedDimOne&) = default;
};

/// For nilpotent L with dim L^2 = 1, the (m, r) with L = H(m) + A(r).
DerivedDimOne recognize_derived_dim_one(const LieAlgebra& l);

class NotNilpotent : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace nilmul
