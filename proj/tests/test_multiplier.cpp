#include "nilmul/multiplier.hpp"

#include "doctest.h"

#include <random>

using namespace nilmul;

namespace {

Matrix random_lift(std::mt19937& rng, const LieAlgebra& l) {
  const Subspace derived = series(l).lower(2);
  const auto gens = derived.non_pivots();
  const std::size_t n = l.dim(), d = gens.size();
  std::uniform_int_distribution<int> entry(-2, 2);
  Matrix mix(d, d);
  do {
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) mix(i, j) = ratio(entry(rng), 1 + static_cast<long>(rng() % 2));
  } while (rref(mix).rank != d);
  Matrix lift(d, n);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) lift(i, gens[j]) += mix(i, j);
    for (std::size_t r = 0; r < derived.dim(); ++r) {
      const Rational w = entry(rng);
      for (std::size_t k = 0; k < n; ++k) lift(i, k) += w * derived.basis()(r, k);
    }
  }
  return lift;
}

std::vector<LieAlgebra> corpus() {
  std::vector<LieAlgebra> out;
  for (std::size_t n = 1; n <= 4; ++n) out.push_back(abelian(n));
  for (std::size_t m = 1; m <= 2; ++m) out.push_back(heisenberg(m));
  out.push_back(direct_sum(heisenberg(1), abelian(1)));
  out.push_back(as_lie_algebra(*free_nilpotent(2, 3)));
  return out;
}

Subspace line_through(std::vector<Rational> v) { return Subspace::span(v.size(), {to_sparse(v)}); }

}  // namespace

TEST_CASE("present examples") {
  const auto h = present(heisenberg(1), 2);
  CHECK(h.ambient->rank() == 2);
  CHECK(h.ambient->nilpotency_class() == 4);
  CHECK(h.ambient->dim() == 8);
  CHECK(h.relations.dim() == 5);
  CHECK(h.relations == Subspace::coordinate(8, std::vector<std::size_t>{3, 4, 5, 6, 7}));

  const auto a1 = present(abelian(1), 1);
  CHECK(a1.ambient->dim() == 1);
  CHECK(a1.relations.is_zero());

  const auto a2 = present(abelian(2), 2);
  CHECK(a2.ambient->dim() == 5);
  CHECK(a2.relations.dim() == witt(2, 2) + witt(2, 3));
}

TEST_CASE("property: presentations are surjective homomorphisms") {
  for (const auto& l : corpus())
    for (std::size_t c = 1; c <= 2; ++c) {
      const auto p = present(l, c);
      const auto& f = *p.ambient;
      CHECK(rref(p.onto_map).rank == l.dim());
      CHECK(f.dim() - p.relations.dim() == l.dim());
      const std::size_t k = *series(l).nilpotency_class;
      CHECK(p.relations.contains(intersect_tail(Subspace::full(f.dim()), f.weight_offset(k + 1))));
      const Matrix images = p.onto_map.transpose();
      for (std::size_t i = 0; i < f.dim(); ++i)
        for (std::size_t j = 0; j < i; ++j) {
          std::vector<Rational> lhs(l.dim());
          for (const auto& [w, coeff] : f.bracket(i, j))
            for (std::size_t t = 0; t < l.dim(); ++t) lhs[t] += Rational(coeff) * images(w, t);
          CHECK(lhs == l.bracket(images.row(i), images.row(j)));
        }
    }
}

TEST_CASE("the H(1) multiplier as a quotient of subspaces") {
  const auto p = present(heisenberg(1), 2);
  const auto& f = *p.ambient;
  const Subspace top = intersect_tail(p.relations, f.weight_offset(3));
  const Subspace inner = subideal_bracket(p.relations, f, 2);
  CHECK(quotient_dim(top, inner) == 5);
}

TEST_CASE("subideal_bracket examples") {
  const auto f24 = free_nilpotent(2, 4);
  const Subspace gamma3 = intersect_tail(Subspace::full(8), f24->weight_offset(3));
  CHECK(subideal_bracket(gamma3, *f24, 2).is_zero());
  CHECK(subideal_bracket(gamma3, *f24, 1).dim() == 3);
  CHECK(subideal_bracket(gamma3, *f24, 0) == gamma3);
  for (std::size_t k = 0; k <= 3; ++k) CHECK(subideal_bracket(Subspace(8), *f24, k).is_zero());

  const auto f22 = free_nilpotent(2, 2);
  const Subspace g2 = subideal_bracket(Subspace::full(3), *f22, 1);
  CHECK(g2 == Subspace::coordinate(3, std::vector<std::size_t>{2}));

  // span{x} is not an ideal: [x,F] = span{[y,x], [y,x,x]}
  const auto f23 = free_nilpotent(2, 3);
  const Subspace x = Subspace::coordinate(5, std::vector<std::size_t>{0});
  CHECK(subideal_bracket(x, *f23, 1) == Subspace::coordinate(5, std::vector<std::size_t>{2, 3}));
}

TEST_CASE("nilpotent_multiplier examples") {
  const auto h1 = nilpotent_multiplier(heisenberg(1), 2);
  CHECK(h1.dimension == 5);
  CHECK(h1.words() == std::vector<std::string>{"[y,x,x]", "[y,x,y]", "[y,x,x,x]", "[y,x,x,y]", "[y,x,y,y]"});
  CHECK(nilpotent_multiplier(abelian(2), 2).dimension == 2);
  CHECK(nilpotent_multiplier(heisenberg(1), 1).dimension == 2);
  CHECK(nilpotent_multiplier(heisenberg(2), 1).dimension == 5);
  CHECK(nilpotent_multiplier(heisenberg(2), 2).dimension == 20);
}

TEST_CASE("weights above two are opt-in") {
  CHECK_THROWS_AS(nilpotent_multiplier(abelian(2), 3), WeightNotSupported);
  CHECK_THROWS_AS(nilpotent_multiplier(abelian(2), 0), std::invalid_argument);
  PresentOptions opt;
  opt.allow_high_weight = true;
  // for abelian L the multiplier of weight c is gamma_{c+1}/gamma_{c+2} of the free algebra
  for (std::size_t n = 1; n <= 3; ++n)
    for (std::size_t c = 1; c <= 4; ++c)
      CHECK(nilpotent_multiplier(abelian(n), c, opt).dimension == witt(n, c + 1));
}

TEST_CASE("non-nilpotent and degenerate input is rejected") {
  RawTable raw(2, "ax+b");
  raw.set_antisymmetric(0, 1, {{1, Rational(1)}});
  const auto l = LieAlgebra::validate(raw);
  CHECK_THROWS_AS(present(l, 1), NotNilpotent);
  CHECK_THROWS_AS(nilpotent_multiplier(l, 2), NotNilpotent);
  CHECK_THROWS_AS(present(abelian(0), 1), std::invalid_argument);
  PresentOptions bad;
  bad.lift = Matrix{{0, 0, 1}, {1, 0, 0}};
  CHECK_THROWS_AS(present(heisenberg(1), 2, bad), std::invalid_argument);
}

TEST_CASE("z_star examples") {
  const auto h2 = heisenberg(2);
  CHECK(z_star(h2, 1) == series(h2).lower(2));
  CHECK(z_star(heisenberg(1), 1).is_zero());
  CHECK(z_star(abelian(1), 1) == Subspace::full(1));
  CHECK(z_star(heisenberg(1), 2).is_zero());
}

TEST_CASE("capability examples") {
  CHECK(is_capable(heisenberg(1)));
  CHECK(is_two_capable(heisenberg(1)));
  CHECK_FALSE(is_capable(heisenberg(3)));
  CHECK_FALSE(is_two_capable(heisenberg(3)));
  CHECK_FALSE(is_capable(abelian(1)));
  for (std::size_t n = 2; n <= 4; ++n) {
    CHECK(is_capable(abelian(n)));
    CHECK(is_two_capable(abelian(n)));
  }
}

TEST_CASE("formula_oracle examples") {
  CHECK(abelian_m2(3) == 8);
  CHECK(heisenberg_m2(3) == 70);
  CHECK(direct_sum_m2(5, 0, 2, 1) == 11);
  CHECK(derived_dim_one_m2(4, 1) == 11);
  const std::int64_t p[] = {5, 0, 2, 1};
  CHECK(formula_oracle(Formula::DirectSumM2, p) == 11);
  const std::int64_t q[] = {2};
  CHECK(formula_oracle(Formula::SchurHeisenberg, q) == 5);
  CHECK(formula_oracle(Formula::HeisenbergM2, q) == 20);
  CHECK(formula_oracle(Formula::AbelianM2, q) == 2);

  CHECK_THROWS_AS(abelian_m2(-1), InvalidParameters);
  CHECK_THROWS_AS(heisenberg_m2(0), InvalidParameters);
  CHECK_THROWS_AS(schur_heisenberg(0), InvalidParameters);
  CHECK_THROWS_AS(derived_dim_one_m2(4, 2), InvalidParameters);
  CHECK_THROWS_AS(formula_oracle(Formula::DirectSumM2, q), InvalidParameters);
}

TEST_CASE("bound_report examples") {
  const auto a4 = bound_report(abelian(4));
  CHECK(a4.value == 20);
  CHECK(a4.general == 20);
  CHECK(a4.general_slack == 0);
  CHECK_FALSE(a4.refined.has_value());

  const auto h1 = bound_report(heisenberg(1));
  CHECK(h1.value == 5);
  CHECK(h1.general == 8);
  CHECK(h1.refined == 5);
  CHECK(h1.refined_slack == 0);
  CHECK(h1.consistent());

  const auto h2 = bound_report(heisenberg(2));
  CHECK(h2.value == 20);
  CHECK(h2.general == 40);
  CHECK(h2.consistent());
}

TEST_CASE("property: closed forms match the algorithm") {
  for (std::int64_t n = 1; n <= 6; ++n) CHECK(nilpotent_multiplier(abelian(n), 2).dimension == abelian_m2(n));
  for (std::int64_t m = 1; m <= 3; ++m) {
    CHECK(nilpotent_multiplier(heisenberg(m), 1).dimension == schur_heisenberg(m));
    CHECK(nilpotent_multiplier(heisenberg(m), 2).dimension == heisenberg_m2(m));
  }
  for (std::int64_t m = 1; m <= 2; ++m)
    for (std::int64_t r = 0; r <= 2; ++r) {
      const std::int64_t n = 2 * m + 1 + r;
      const auto l = direct_sum(heisenberg(m), abelian(r));
      CHECK(nilpotent_multiplier(l, 2).dimension == derived_dim_one_m2(n, m));
    }
}

TEST_CASE("property: multiplier dimension does not depend on the lift or basis order") {
  std::mt19937 rng(17);
  for (const auto& l : corpus())
    for (std::size_t c = 1; c <= 2; ++c) {
      const std::size_t expected = nilpotent_multiplier(l, c).dimension;
      for (int t = 0; t < 3; ++t) {
        PresentOptions opt;
        opt.lift = random_lift(rng, l);
        CHECK(nilpotent_multiplier(l, c, opt).dimension == expected);
        CHECK(z_star(l, c, opt) == z_star(l, c));
      }
      std::vector<std::size_t> perm(l.dim());
      for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
      std::shuffle(perm.begin(), perm.end(), rng);
      Matrix p(l.dim(), l.dim());
      for (std::size_t i = 0; i < perm.size(); ++i) p(i, perm[i]) = 1;
      const auto moved = change_basis(l, p);
      CHECK(nilpotent_multiplier(moved, c).dimension == expected);
      CHECK(z_star(moved, c).dim() == z_star(l, c).dim());
    }
}

TEST_CASE("property: direct-sum law over pairs of small algebras") {
  std::vector<LieAlgebra> parts{abelian(1), abelian(2), abelian(3), heisenberg(1)};
  for (const auto& a : parts)
    for (const auto& b : parts) {
      const std::int64_t ga = a.dim() - series(a).lower(2).dim();
      const std::int64_t gb = b.dim() - series(b).lower(2).dim();
      const auto ma = nilpotent_multiplier(a, 2).dimension, mb = nilpotent_multiplier(b, 2).dimension;
      CHECK(nilpotent_multiplier(direct_sum(a, b), 2).dimension ==
            direct_sum_m2(static_cast<std::int64_t>(ma), static_cast<std::int64_t>(mb), ga, gb));
    }
}

TEST_CASE("property: epicenters are nested central ideals") {
  auto algebras = corpus();
  algebras.push_back(heisenberg(3));
  algebras.push_back(direct_sum(heisenberg(2), abelian(1)));
  for (const auto& l : algebras) {
    const auto s = series(l);
    const Subspace z1 = z_star(l, 1), z2 = z_star(l, 2);
    CHECK(z2.contains(z1));
    CHECK(s.upper(1).contains(z1));
    CHECK(s.upper(2).contains(z2));
    CHECK(is_ideal(l, z1));
    CHECK(is_ideal(l, z2));
    const Analysis both = analyze(l, 2);
    CHECK(both.epicenter == z2);
    CHECK(both.multiplier.dimension == nilpotent_multiplier(l, 2).dimension);
  }
}

TEST_CASE("property: quotient inequality on central lines") {
  std::mt19937 rng(23);
  auto algebras = corpus();
  algebras.push_back(direct_sum(heisenberg(2), abelian(1)));
  for (const auto& l : algebras) {
    const auto s = series(l);
    const Subspace whole = Subspace::full(l.dim());
    const std::size_t m2 = nilpotent_multiplier(l, 2).dimension;
    std::vector<Subspace> lines;
    for (std::size_t r = 0; r < s.upper(1).dim(); ++r) {
      auto row = s.upper(1).basis().row(r);
      lines.push_back(line_through({row.begin(), row.end()}));
    }
    for (int t = 0; t < 2; ++t) {
      std::vector<Rational> v(l.dim());
      for (std::size_t r = 0; r < s.upper(1).dim(); ++r) {
        const Rational w = static_cast<long>(rng() % 5) - 2;
        for (std::size_t k = 0; k < l.dim(); ++k) v[k] += w * s.upper(1).basis()(r, k);
      }
      if (!is_zero(v)) lines.push_back(line_through(v));
    }
    for (const auto& line : lines) {
      const LieAlgebra q = quotient(l, line);
      const std::size_t mq = q.dim() == 0 ? 0 : nilpotent_multiplier(q, 2).dimension;
      const Subspace inner = bracket_span(l, bracket_span(l, line, whole), whole);
      const std::size_t corr = quotient_dim(intersect(line, s.lower(3)), inner);
      CHECK(mq <= m2 + corr);
    }
  }
}

TEST_CASE("H(1) has no central line in its second epicenter") {
  const auto h1 = heisenberg(1);
  const auto q = quotient(h1, series(h1).lower(2));
  CHECK(nilpotent_multiplier(q, 2).dimension == 2);
  CHECK(nilpotent_multiplier(h1, 2).dimension == 5);
  CHECK(z_star(h1, 2).is_zero());
}
