#include "nilmul/multiplier.hpp"

namespace nilmul {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw InvalidParameters(what);
}

}  // namespace

std::uint64_t abelian_m2(std::int64_t n) {
  require(n >= 0, "abelian_m2: n must be non-negative");
  return static_cast<std::uint64_t>(n * (n - 1) * (n + 1) / 3);
}

std::uint64_t heisenberg_m2(std::int64_t m) {
  require(m >= 1, "heisenberg_m2: m must be at least 1");
  if (m == 1) return 5;
  return static_cast<std::uint64_t>((8 * m * m * m - 2 * m) / 3);
}

std::uint64_t schur_heisenberg(std::int64_t m) {
  require(m >= 1, "schur_heisenberg: m must be at least 1");
  if (m == 1) return 2;
  return static_cast<std::uint64_t>(2 * m * m - m - 1);
}

std::uint64_t derived_dim_one_m2(std::int64_t n, std::int64_t m) {
  require(m >= 1, "derived_dim_one_m2: m must be at least 1");
  require(n >= 2 * m + 1, "derived_dim_one_m2: n must be at least 2m + 1");
  return static_cast<std::uint64_t>(n * (n - 1) * (n - 2) / 3 + (m == 1 ? 3 : 0));
}

std::uint64_t direct_sum_m2(std::int64_t m2a, std::int64_t m2b, std::int64_t a, std::int64_t b) {
  require(m2a >= 0 && m2b >= 0 && a >= 0 && b >= 0, "direct_sum_m2: parameters must be non-negative");
  return static_cast<std::uint64_t>(m2a + m2b + a * a * b + b * b * a);
}

std::uint64_t formula_oracle(Formula kind, std::span<const std::int64_t> params) {
  auto arity = [&](std::size_t k) {
    if (params.size() != k) throw InvalidParameters("formula_oracle: expected " + std::to_string(k) + " parameters");
  };
  switch (kind) {
    case Formula::AbelianM2:
      arity(1);
      return abelian_m2(params[0]);
    case Formula::HeisenbergM2:
      arity(1);
      return heisenberg_m2(params[0]);
    case Formula::SchurHeisenberg:
      arity(1);
      return schur_heisenberg(params[0]);
    case Formula::DerivedDimOneM2:
      arity(2);
      return derived_dim_one_m2(params[0], params[1]);
    case Formula::DirectSumM2:
      arity(4);
      return direct_sum_m2(params[0], params[1], params[2], params[3]);
  }
  throw InvalidParameters("formula_oracle: unknown formula");
}

std::uint64_t general_bound(std::int64_t n) { return abelian_m2(n); }

std::uint64_t refined_bound(std::int64_t n, std::int64_t m) {
  require(m >= 1 && n > m, "refined_bound: need 1 <= m < n");
  return static_cast<std::uint64_t>((n - m) * ((n + 2 * m - 2) * (n - m - 1) + 3 * (m - 1)) / 3 + 3);
}

}  // namespace nilmul
