#include "nilmul/freelie.hpp"

#include "assoc_oracle.hpp"
#include "doctest.h"

#include <random>

using namespace nilmul;

namespace {

std::vector<std::string> stratum(const FreeNilpotentAlgebra& f, std::size_t len) {
  std::vector<std::string> out;
  for (std::size_t i = f.weight_offset(len); i < f.weight_offset(len + 1); ++i) out.push_back(f.word(i));
  return out;
}

SparseVector unit(std::size_t i) { return {{i, Rational(1)}}; }

SparseVector add(SparseVector a, const SparseVector& b) {
  std::vector<Rational> acc;
  std::size_t n = 0;
  for (auto& [k, _] : a) n = std::max(n, k + 1);
  for (auto& [k, _] : b) n = std::max(n, k + 1);
  acc.assign(n, Rational(0));
  for (auto& [k, v] : a) acc[k] += v;
  for (auto& [k, v] : b) acc[k] += v;
  return to_sparse(acc);
}

SparseVector jacobi(const FreeNilpotentAlgebra& f, std::size_t a, std::size_t b, std::size_t c) {
  const auto ea = unit(a), eb = unit(b), ec = unit(c);
  return add(add(f.bracket(f.bracket(ea, eb), ec), f.bracket(f.bracket(eb, ec), ea)), f.bracket(f.bracket(ec, ea), eb));
}

void check_antisymmetry(const FreeNilpotentAlgebra& f) {
  for (std::size_t i = 0; i < f.dim(); ++i) {
    CHECK(f.bracket(i, i).empty());
    for (std::size_t j = 0; j < i; ++j) {
      auto ij = f.bracket(i, j), ji = f.bracket(j, i);
      REQUIRE(ij.size() == ji.size());
      for (std::size_t t = 0; t < ij.size(); ++t) {
        CHECK(ij[t].first == ji[t].first);
        CHECK(ij[t].second == -ji[t].second);
      }
    }
  }
}

}  // namespace

TEST_CASE("witt examples") {
  CHECK(witt(2, 1) == 2);
  CHECK(witt(2, 3) == 2);
  CHECK(witt(2, 4) == 3);
  CHECK(witt(4, 2) == 6);
  CHECK(witt(3, 6) == 116);
  CHECK(witt(1, 1) == 1);
  CHECK(witt(1, 5) == 0);
}

TEST_CASE("witt counts primitive necklaces") {
  // independent count: aperiodic words / n
  for (std::uint64_t d = 1; d <= 4; ++d)
    for (std::uint64_t n = 1; n <= 6; ++n) {
      std::uint64_t total = 1;
      for (std::uint64_t t = 0; t < n; ++t) total *= d;
      std::uint64_t aperiodic = 0;
      for (std::uint64_t code = 0; code < total; ++code) {
        std::vector<std::uint64_t> w(n);
        std::uint64_t c = code;
        for (std::uint64_t t = 0; t < n; ++t) w[t] = c % d, c /= d;
        bool periodic = false;
        for (std::uint64_t p = 1; p < n && !periodic; ++p) {
          if (n % p) continue;
          bool same = true;
          for (std::uint64_t t = 0; t < n && same; ++t) same = w[t] == w[(t + p) % n];
          periodic = same;
        }
        aperiodic += periodic ? 0 : 1;
      }
      CHECK(witt(d, n) == aperiodic / n);
    }
}

TEST_CASE("hall_basis examples") {
  auto b1 = FreeNilpotentAlgebra(2, 1);
  CHECK(stratum(b1, 1) == std::vector<std::string>{"x", "y"});

  auto b2 = FreeNilpotentAlgebra(2, 2);
  CHECK(b2.dim() == 3);
  CHECK(b2.word(2) == "[y,x]");

  auto b4 = FreeNilpotentAlgebra(2, 4);
  CHECK(b4.dim() == 8);
  CHECK(stratum(b4, 1).size() == 2);
  CHECK(stratum(b4, 2).size() == 1);
  CHECK(stratum(b4, 3) == std::vector<std::string>{"[y,x,x]", "[y,x,y]"});
  CHECK(stratum(b4, 4) == std::vector<std::string>{"[y,x,x,x]", "[y,x,x,y]", "[y,x,y,y]"});
}

TEST_CASE("words with composite right factors display nested") {
  auto f = FreeNilpotentAlgebra(3, 4);
  bool found = false;
  for (std::size_t i = 0; i < f.dim(); ++i) {
    const auto& w = f.basis()[i];
    if (!w.is_leaf() && !f.basis()[w.right].is_leaf()) {
      found = true;
      CHECK(f.word(i) == "[" + f.word(w.left).substr(1, f.word(w.left).size() - 2) + "," + f.word(w.right) + "]");
    }
  }
  CHECK(found);
  CHECK(generator_names(4) == std::vector<std::string>{"x1", "x2", "x3", "x4"});
}

TEST_CASE("property: stratum counts equal witt and words satisfy the Hall conditions") {
  for (std::size_t d = 1; d <= 8; ++d) {
    const HallBasis basis = hall_basis(d, 6);
    std::vector<std::uint64_t> count(7, 0);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      const HallWord& w = basis[i];
      ++count[w.length];
      CHECK(w.order_key == i);
      if (i > 0) CHECK(basis[i - 1].length <= w.length);
      if (w.is_leaf()) continue;
      const HallWord& a = basis[w.left];
      const HallWord& b = basis[w.right];
      CHECK(w.left > w.right);
      CHECK(w.length == a.length + b.length);
      if (!a.is_leaf()) CHECK(w.right >= a.right);
      if (i > 0 && basis[i - 1].length == w.length && !basis[i - 1].is_leaf())
        CHECK(std::pair(basis[i - 1].left, basis[i - 1].right) < std::pair(w.left, w.right));
    }
    for (std::size_t n = 1; n <= 6; ++n) CHECK_MESSAGE(count[n] == witt(d, n), "d=" << d << " n=" << n);
  }
}

TEST_CASE("free_nilpotent examples") {
  auto h = free_nilpotent(2, 2);
  CHECK(h->dim() == 3);
  CHECK(h->bracket(1, 0) == WordCombination{{2, 1}});
  CHECK(h->bracket(0, 1) == WordCombination{{2, -1}});
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      if (!((i == 0 && j == 1) || (i == 1 && j == 0))) CHECK(h->bracket(i, j).empty());

  for (std::size_t c = 1; c <= 5; ++c) {
    auto one = free_nilpotent(1, c);
    CHECK(one->dim() == 1);
    CHECK(one->bracket(0, 0).empty());
  }

  auto f = free_nilpotent(2, 4);
  CHECK(f->dim() == 8);
  CHECK(f->weight_offset(5) - f->weight_offset(3) == 5);
}

TEST_CASE("reduce_bracket examples") {
  auto f = free_nilpotent(2, 4);
  for (std::size_t u = 0; u < f->dim(); ++u) CHECK(reduce_bracket(u, u, *f).empty());
  CHECK(reduce_bracket(0, 1, *f) == WordCombination{{2, -1}});
  // [y,x,y] is index 4, x is 0, [y,x,x,y] is index 6
  REQUIRE(f->word(4) == "[y,x,y]");
  REQUIRE(f->word(6) == "[y,x,x,y]");
  CHECK(reduce_bracket(4, 0, *f) == WordCombination{{6, 1}});
  CHECK(reduce_bracket(3, 2, *f).empty());
  CHECK_THROWS_AS(reduce_bracket(8, 0, *f), UnknownWord);
}

TEST_CASE("property: reduce_bracket is antisymmetric and graded") {
  for (auto [d, c] : {std::pair{2, 5}, {3, 4}, {4, 3}}) {
    auto f = free_nilpotent(d, c);
    for (std::size_t u = 0; u < f->dim(); ++u)
      for (std::size_t v = 0; v < f->dim(); ++v) {
        auto uv = reduce_bracket(u, v, *f), vu = reduce_bracket(v, u, *f);
        REQUIRE(uv.size() == vu.size());
        const std::size_t len = f->basis()[u].length + f->basis()[v].length;
        for (std::size_t t = 0; t < uv.size(); ++t) {
          CHECK(uv[t].first == vu[t].first);
          CHECK(uv[t].second == -vu[t].second);
          CHECK(f->basis()[uv[t].first].length == len);
        }
        if (len > static_cast<std::size_t>(c)) CHECK(uv.empty());
      }
  }
}

TEST_CASE("property: antisymmetry and Jacobi, exhaustive up to dimension 120") {
  for (auto [d, c] : {std::pair{2, 4}, {3, 3}, {2, 5}, {2, 6}, {3, 4}, {4, 3}, {5, 3}, {3, 5}, {4, 4}, {2, 8}}) {
    auto f = free_nilpotent(d, c);
    REQUIRE(f->dim() <= 120);
    check_antisymmetry(*f);
    std::size_t failures = 0;
    for (std::size_t a = 0; a < f->dim(); ++a)
      for (std::size_t b = a + 1; b < f->dim(); ++b) {
        if (f->basis()[a].length + f->basis()[b].length >= static_cast<std::size_t>(c)) continue;
        for (std::size_t e = b + 1; e < f->dim(); ++e)
          if (!jacobi(*f, a, b, e).empty()) ++failures;
      }
    CHECK_MESSAGE(failures == 0, "d=" << d << " c=" << c);
  }
}

TEST_CASE("property: Jacobi on 10^4 random triples of larger algebras") {
  std::mt19937 rng(2024);
  for (auto [d, c] : {std::pair{5, 4}, {3, 6}, {2, 10}}) {
    auto f = free_nilpotent(d, c);
    REQUIRE(f->dim() > 120);
    std::uniform_int_distribution<std::size_t> pick(0, f->dim() - 1);
    std::size_t failures = 0;
    for (int t = 0; t < 10000; ++t)
      if (!jacobi(*f, pick(rng), pick(rng), pick(rng)).empty()) ++failures;
    CHECK_MESSAGE(failures == 0, "d=" << d << " c=" << c);
  }
}

TEST_CASE("property: reduce_bracket matches the free associative algebra") {
  for (std::size_t c = 1; c <= 4; ++c) {
    auto f = free_nilpotent(2, c);
    CHECK(test_oracle::mismatches(*f) == 0);
  }
  CHECK(test_oracle::mismatches(*free_nilpotent(3, 4)) == 0);
  CHECK(test_oracle::mismatches(*free_nilpotent(2, 6)) == 0);
}

TEST_CASE("cap exceeded") {
  CHECK_THROWS_AS(free_nilpotent(8, 6), CapExceeded);
  CHECK_THROWS_AS(free_nilpotent(2, 4, 7), CapExceeded);
  CHECK_NOTHROW(free_nilpotent(2, 4, 8));
}
