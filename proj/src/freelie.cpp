#include "nilmul/freelie.hpp"

#include <algorithm>
#include <map>

namespace nilmul {

namespace {

int mobius(std::uint64_t n) {
  int result = 1;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

__int128 checked_power(std::uint64_t base, std::uint64_t exp) {
  __int128 r = 1;
  constexpr __int128 limit = static_cast<__int128>(1) << 100;
  for (std::uint64_t k = 0; k < exp; ++k) {
    r *= base;
    if (r > limit) throw std::overflow_error("witt: count too large");
  }
  return r;
}

std::uint64_t pair_key(std::size_t a, std::size_t b) { return (static_cast<std::uint64_t>(a) << 32) | b; }

using Accumulator = std::map<std::uint32_t, std::int64_t>;

void add_into(Accumulator& acc, const WordCombination& w, std::int64_t scale) {
  for (const auto& [k, x] : w) acc[k] += scale * x;
}

WordCombination flatten(const Accumulator& acc) {
  WordCombination out;
  for (const auto& [k, x] : acc)
    if (x != 0) out.emplace_back(k, x);
  return out;
}

WordCombination negate(WordCombination w) {
  for (auto& entry : w) entry.second = -entry.second;
  return w;
}

}  // namespace

std::uint64_t witt(std::uint64_t d, std::uint64_t n) {
  if (d == 0 || n == 0) throw std::invalid_argument("witt: generators and length must be positive");
  __int128 total = 0;
  for (std::uint64_t m = 1; m <= n; ++m) {
    if (n % m != 0) continue;
    const int mu = mobius(m);
    if (mu != 0) total += mu * checked_power(d, n / m);
  }
  return static_cast<std::uint64_t>(total / n);
}

HallBasis hall_basis(std::size_t d, std::size_t c) {
  if (d == 0 || c == 0) throw std::invalid_argument("hall_basis: generators and class must be positive");
  HallBasis basis;
  std::vector<std::size_t> start{0, 0};  // start[k] = first word of length k
  for (std::size_t g = 0; g < d; ++g) {
    HallWord w;
    w.generator = g;
    w.order_key = basis.size();
    basis.push_back(w);
  }
  for (std::size_t n = 2; n <= c; ++n) {
    start.push_back(basis.size());
    const std::size_t end = basis.size();
    for (std::size_t i = 0; i < end; ++i) {
      const std::size_t a = basis[i].length;
      if (a >= n || n - a > a) continue;
      const std::size_t lo = start[n - a], hi = start[n - a + 1];
      for (std::size_t j = lo; j < hi && j < i; ++j) {
        if (!basis[i].is_leaf() && j < basis[i].right) continue;
        HallWord w;
        w.left = i;
        w.right = j;
        w.length = n;
        w.order_key = basis.size();
        basis.push_back(w);
      }
    }
  }
  return basis;
}

std::vector<std::string> generator_names(std::size_t d) {
  std::vector<std::string> names;
  static const char* small[] = {"x", "y", "z"};
  for (std::size_t g = 0; g < d; ++g) names.push_back(d <= 3 ? small[g] : "x" + std::to_string(g + 1));
  return names;
}

namespace {

std::string flatten_word(const HallBasis& basis, std::size_t i, const std::vector<std::string>& names) {
  const HallWord& w = basis.at(i);
  if (w.is_leaf()) return names.at(w.generator);
  const HallWord& r = basis[w.right];
  std::string right = r.is_leaf() ? names.at(r.generator) : "[" + flatten_word(basis, w.right, names) + "]";
  return flatten_word(basis, w.left, names) + "," + right;
}

}  // namespace

std::string format_word(const HallBasis& basis, std::size_t index, const std::vector<std::string>& names) {
  if (basis.at(index).is_leaf()) return flatten_word(basis, index, names);
  return "[" + flatten_word(basis, index, names) + "]";
}

// ---------------------------------------------------------------- FreeNilpotentAlgebra

FreeNilpotentAlgebra::FreeNilpotentAlgebra(std::size_t rank, std::size_t nilpotency_class, std::size_t cap)
    : rank_(rank), class_(nilpotency_class) {
  if (rank == 0 || nilpotency_class == 0)
    throw std::invalid_argument("free_nilpotent: rank and class must be positive");
  std::uint64_t total = 0;
  for (std::size_t n = 1; n <= nilpotency_class; ++n) {
    total += witt(rank, n);
    if (total > cap)
      throw CapExceeded("free_nilpotent(" + std::to_string(rank) + "," + std::to_string(nilpotency_class) +
                        "): dimension exceeds cap " + std::to_string(cap));
  }
  basis_ = hall_basis(rank, nilpotency_class);
  names_ = generator_names(rank);

  offsets_.assign(class_ + 2, basis_.size());
  for (std::size_t i = basis_.size(); i-- > 0;) offsets_[basis_[i].length] = i;
  offsets_[0] = 0;
  for (std::size_t k = class_; k >= 1; --k)
    offsets_[k] = std::min(offsets_[k], offsets_[k + 1]);

  for (const auto& w : basis_)
    if (!w.is_leaf()) composite_index_.emplace(pair_key(w.left, w.right), w.order_key);

  row_start_.assign(basis_.size() + 1, 0);
  for (std::size_t i = 0; i < basis_.size(); ++i) row_start_[i + 1] = row_start_[i] + row_width(i);
  table_.resize(row_start_.back());
  state_.assign(row_start_.back(), 0);

  for (std::size_t i = 0; i < basis_.size(); ++i)
    for (std::size_t j = 0; j < row_width(i); ++j) compute(i, j);
}

std::size_t FreeNilpotentAlgebra::weight_offset(std::size_t k) const {
  if (k == 0 || k > class_ + 1) throw std::out_of_range("weight_offset: length out of range");
  return offsets_[k];
}

std::size_t FreeNilpotentAlgebra::row_width(std::size_t i) const {
  const std::size_t len = basis_[i].length;
  if (len >= class_) return 0;
  return std::min(i, offsets_[class_ - len + 1]);
}

std::size_t FreeNilpotentAlgebra::slot(std::size_t i, std::size_t j) const { return row_start_[i] + j; }

WordCombination FreeNilpotentAlgebra::signed_compute(std::size_t i, std::size_t j) {
  if (i == j) return {};
  if (basis_[i].length + basis_[j].length > class_) return {};
  if (i > j) return compute(i, j);
  return negate(compute(j, i));
}

// Hall collection: [[s,t],v] = [[s,v],t] + [s,[t,v]] whenever v < t.
const WordCombination& FreeNilpotentAlgebra::compute(std::size_t i, std::size_t j) {
  const std::size_t k = slot(i, j);
  if (state_[k] == 2) return table_[k];
  if (state_[k] == 1) throw std::logic_error("Hall collection did not terminate");
  state_[k] = 1;

  const HallWord& u = basis_[i];
  WordCombination result;
  if (u.is_leaf() || j >= u.right) {
    auto it = composite_index_.find(pair_key(i, j));
    if (it == composite_index_.end()) throw std::logic_error("basic commutator missing from basis");
    result.emplace_back(static_cast<std::uint32_t>(it->second), 1);
  } else {
    const std::size_t s = u.left, t = u.right;
    Accumulator acc;
    for (const auto& [w, a] : signed_compute(s, j)) add_into(acc, signed_compute(w, t), a);
    for (const auto& [w, b] : signed_compute(t, j)) add_into(acc, signed_compute(s, w), b);
    result = flatten(acc);
  }
  table_[k] = std::move(result);
  state_[k] = 2;
  return table_[k];
}

WordCombination FreeNilpotentAlgebra::bracket(std::size_t i, std::size_t j) const {
  if (i >= dim() || j >= dim()) throw UnknownWord("bracket: basis index out of range");
  if (i == j || basis_[i].length + basis_[j].length > class_) return {};
  if (i > j) return table_[slot(i, j)];
  return negate(table_[slot(j, i)]);
}

SparseVector FreeNilpotentAlgebra::bracket_with_word(const SparseVector& u, std::size_t j) const {
  std::map<std::size_t, Rational> acc;
  for (const auto& [i, x] : u)
    for (const auto& [w, a] : bracket(i, j)) acc[w] += x * a;
  SparseVector out;
  for (auto& [w, x] : acc)
    if (sgn(x) != 0) out.emplace_back(w, std::move(x));
  return out;
}

SparseVector FreeNilpotentAlgebra::bracket(const SparseVector& u, const SparseVector& v) const {
  std::map<std::size_t, Rational> acc;
  for (const auto& [i, x] : u)
    for (const auto& [j, y] : v) {
      if (basis_.at(i).length + basis_.at(j).length > class_) continue;
      const Rational xy = x * y;
      for (const auto& [w, a] : bracket(i, j)) acc[w] += xy * a;
    }
  SparseVector out;
  for (auto& [w, x] : acc)
    if (sgn(x) != 0) out.emplace_back(w, std::move(x));
  return out;
}

std::shared_ptr<const FreeNilpotentAlgebra> free_nilpotent(std::size_t d, std::size_t c, std::size_t cap) {
  return std::make_shared<const FreeNilpotentAlgebra>(d, c, cap);
}

WordCombination reduce_bracket(std::size_t u, std::size_t v, const FreeNilpotentAlgebra& ambient) {
  if (u >= ambient.dim() || v >= ambient.dim())
    throw UnknownWord("reduce_bracket: word is not in the ambient basis");
  return ambient.bracket(u, v);
}

}  // namespace nilmul
