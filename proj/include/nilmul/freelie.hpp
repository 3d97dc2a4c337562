#pragma once

// Hall bases of free Lie algebras and free nilpotent Lie algebras.
//
// Basic commutators are ordered by length, then lexicographically by the
// positions of their two factors. A composite word [a, b] is basic when
// a > b and, if a = [s, t], b >= t. Words display left-normed:
// [y,x,x] means [[y,x],x].

#include "nilmul/exactlin.hpp"

#include <cstddef>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace nilmul {

/// A basic commutator. Factors refer to positions in the owning basis, so a
/// word's position is also its order key.
struct HallWord {
  static constexpr std::size_t none = static_cast<std::size_t>(-1);

  std::size_t generator = none;  // leaf only
  std::size_t left = none;       // composite only
  std::size_t right = none;
  std::size_t length = 1;
  std::size_t order_key = 0;

  bool is_leaf() const { return left == none; }
  friend bool operator==(const HallWord&, const HallWord&) = default;
};

using HallBasis = std::vector<HallWord>;

/// Number of basic commutators of length n on d generators (Witt's formula).
std::uint64_t witt(std::uint64_t d, std::uint64_t n);

/// All basic commutators of length <= c on d generators, in basis order.
HallBasis hall_basis(std::size_t d, std::size_t c);

/// Default generator names: x, y, z for up to three generators, else x1..xd.
std::vector<std::string> generator_names(std::size_t d);

std::string format_word(const HallBasis& basis, std::size_t index, const std::vector<std::string>& names);

/// Integral combination of basis words, sorted by index.
using WordCombination = std::vector<std::pair<std::uint32_t, std::int64_t>>;

class CapExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

class FreeNilpotentAlgebra {
 public:
  static constexpr std::size_t default_cap = 5000;

  FreeNilpotentAlgebra(std::size_t rank, std::size_t nilpotency_class, std::size_t cap = default_cap);

  std::size_t rank() const { return rank_; }
  std::size_t nilpotency_class() const { return class_; }
  std::size_t dim() const { return basis_.size(); }
  const HallBasis& basis() const { return basis_; }
  const std::vector<std::string>& names() const { return names_; }

  /// Index of the first word of length k (1 <= k <= class + 1); words of
  /// length >= k span gamma_k.
  std::size_t weight_offset(std::size_t k) const;

  /// Structure constants: [b_i, b_j] in the Hall basis.
  WordCombination bracket(std::size_t i, std::size_t j) const;

  /// [u, v] for arbitrary sparse rational combinations of basis words.
  SparseVector bracket(const SparseVector& u, const SparseVector& v) const;

  /// [u, b_j] for a single basis word b_j.
  SparseVector bracket_with_word(const SparseVector& u, std::size_t j) const;

  std::string word(std::size_t i) const { return format_word(basis_, i, names_); }

 private:
  const WordCombination& compute(std::size_t i, std::size_t j);
  WordCombination signed_compute(std::size_t i, std::size_t j);
  std::size_t slot(std::size_t i, std::size_t j) const;
  std::size_t row_width(std::size_t i) const;

  std::size_t rank_;
  std::size_t class_;
  HallBasis basis_;
  std::vector<std::string> names_;
  std::vector<std::size_t> offsets_;
  std::unordered_map<std::uint64_t, std::size_t> composite_index_;
  // Entry (i, j) for i > j with len(i) + len(j) <= class; [b_j, b_i] is
  // its negation and longer brackets vanish.
  std::vector<std::size_t> row_start_;
  std::vector<WordCombination> table_;
  std::vector<char> state_;
};

/// Builds the free nilpotent algebra of the given rank and class.
std::shared_ptr<const FreeNilpotentAlgebra> free_nilpotent(std::size_t d, std::size_t c,
                                                           std::size_t cap = FreeNilpotentAlgebra::default_cap);

class UnknownWord : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// [u, v] for basis positions u, v of the ambient algebra.
WordCombination reduce_bracket(std::size_t u, std::size_t v, const FreeNilpotentAlgebra& ambient);

}  // namespace nilmul
