#pragma once

// c-nilpotent multipliers, epicenters and capability of nilpotent Lie
// algebras, computed from a truncated free presentation.
//
// For L of class k and weight c the free algebra is replaced by the free
// nilpotent algebra of class k + c: gamma_{k+1}(F) lies in R, so
// gamma_{k+c+1}(F) lies in [R,F,...,F] and nothing below that level changes.

#include "nilmul/exactlin.hpp"
#include "nilmul/fdlie.hpp"
#include "nilmul/freelie.hpp"

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace nilmul {

class WeightNotSupported : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct PresentOptions {
  /// Rows are the images of the free generators in L; they must lift a basis
  /// of L/L^2. Defaults to the coordinate vectors off the pivots of L^2.
  std::optional<Matrix> lift;
  /// Weights above 2 are opt-in.
  bool allow_high_weight = false;
  std::size_t cap = FreeNilpotentAlgebra::default_cap;
};

struct Presentation {
  std::shared_ptr<const FreeNilpotentAlgebra> ambient;
  Matrix lift;          // d x n
  Matrix onto_map;      // n x dim(ambient); column j is the image of word j
  Subspace relations;   // kernel of onto_map
  std::size_t weight = 0;
  std::size_t algebra_class = 0;
};

Presentation present(const LieAlgebra& l, std::size_t c, const PresentOptions& options = {});

/// [S, F, ..., F] with `depth` brackets against the whole ambient algebra.
Subspace subideal_bracket(const Subspace& s, const FreeNilpotentAlgebra& ambient, std::size_t depth);

struct MultiplierReport {
  std::size_t weight = 0;
  std::size_t dimension = 0;
  /// Ambient positions of Hall words whose classes form a basis of the
  /// multiplier.
  std::vector<std::size_t> basis_words;
  Presentation presentation;

  std::vector<std::string> words() const;
};

MultiplierReport nilpotent_multiplier(const LieAlgebra& l, std::size_t c, const PresentOptions& options = {});

/// Image in L of Z_c(F / [R,F,...,F]) (c brackets); zero iff L is c-capable.
Subspace z_star(const LieAlgebra& l, std::size_t c, const PresentOptions& options = {});

bool is_capable(const LieAlgebra& l);
bool is_two_capable(const LieAlgebra& l);

/// Multiplier and epicenter from one shared presentation.
struct Analysis {
  MultiplierReport multiplier;
  Subspace epicenter;
};
Analysis analyze(const LieAlgebra& l, std::size_t c, const PresentOptions& options = {});

// ---------------------------------------------------------------- closed forms

enum class Formula { AbelianM2, HeisenbergM2, SchurHeisenberg, DerivedDimOneM2, DirectSumM2 };

class InvalidParameters : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// dim M^(2)(A(n)) = n(n-1)(n+1)/3
std::uint64_t abelian_m2(std::int64_t n);
/// dim M^(2)(H(m)): 5 for m = 1, else (8m^3 - 2m)/3
std::uint64_t heisenberg_m2(std::int64_t m);
/// dim M(H(m)): 2 for m = 1, else 2m^2 - m - 1
std::uint64_t schur_heisenberg(std::int64_t m);
/// dim M^(2)(H(m) + A(n-2m-1)) = n(n-1)(n-2)/3, plus 3 when m = 1
std::uint64_t derived_dim_one_m2(std::int64_t n, std::int64_t m);
/// dim M^(2)(A + B) from the parts and a = dim A/A^2, b = dim B/B^2
std::uint64_t direct_sum_m2(std::int64_t m2a, std::int64_t m2b, std::int64_t a, std::int64_t b);

std::uint64_t formula_oracle(Formula kind, std::span<const std::int64_t> params);

/// n(n-1)(n+1)/3, the bound on dim M^(2)(L) + dim L^3.
std::uint64_t general_bound(std::int64_t n);
/// (n-m)((n+2m-2)(n-m-1) + 3(m-1))/3 + 3 for dim L^2 = m >= 1.
std::uint64_t refined_bound(std::int64_t n, std::int64_t m);

struct BoundReport {
  std::size_t dim = 0;
  std::size_t derived_dim = 0;  // m = dim L^2
  std::size_t cube_dim = 0;     // dim L^3
  std::size_t multiplier_dim = 0;
  std::size_t value = 0;        // dim M^(2)(L) + dim L^3
  std::size_t general = 0;
  std::int64_t general_slack = 0;
  std::optional<std::size_t> refined;  // absent for abelian L
  std::optional<std::int64_t> refined_slack;
  bool abelian = false;

  bool saturates_general() const { return general_slack == 0; }
  /// Both bounds hold and saturation of the first happens only for abelian L.
  bool consistent() const;
};

BoundReport bound_report(const LieAlgebra& l, const PresentOptions& options = {});

/// Assembles the report from already computed dimensions.
BoundReport make_bound_report(std::size_t dim, std::size_t derived_dim, std::size_t cube_dim,
                              std::size_t multiplier_dim);

}  // namespace nilmul
