#include "nilmul/multiplier.hpp"

#include <algorithm>

namespace nilmul {

namespace {

void check_weight(std::size_t c, const PresentOptions& options) {
  if (c == 0) throw WeightNotSupported("weight c must be at least 1");
  if (c > 2 && !options.allow_high_weight)
    throw WeightNotSupported("weight c = " + std::to_string(c) + " requires the explicit high-weight opt-in");
}

SparseVector unit(std::size_t i) { return {{i, Rational(1)}}; }

/// D_0 = R, D_{t+1} = [D_t, F]. Each D_t is an ideal, so bracketing with the
/// free generators is enough.
std::vector<EchelonBuilder> bracket_tower(const Presentation& p, std::size_t depth) {
  const auto& f = *p.ambient;
  std::vector<EchelonBuilder> tower;
  tower.emplace_back(p.relations);
  for (std::size_t t = 0; t < depth; ++t) {
    EchelonBuilder next(f.dim());
    for (const auto& row : tower.back().rows())
      for (std::size_t g = 0; g < f.rank(); ++g) next.insert(f.bracket_with_word(row, g));
    tower.push_back(std::move(next));
  }
  return tower;
}

MultiplierReport multiplier_from(Presentation p, const std::vector<EchelonBuilder>& tower) {
  const auto& f = *p.ambient;
  const std::size_t c = p.weight;
  const std::size_t start = f.weight_offset(c + 1);
  // Leading positions of R ∩ gamma_{c+1}: RREF rows of R with pivot in the tail.
  std::vector<std::size_t> top;
  for (std::size_t piv : p.relations.pivots())
    if (piv >= start) top.push_back(piv);
  const EchelonBuilder& bottom = tower[c];
  std::vector<std::size_t> words;
  std::size_t shared = 0;
  for (std::size_t piv : top) {
    if (bottom.is_pivot(piv))
      ++shared;
    else
      words.push_back(piv);
  }
  if (shared != bottom.rank())
    throw std::logic_error("multiplier: [R,F,...,F] is not contained in R ∩ gamma_{c+1}");

  MultiplierReport rep;
  rep.weight = c;
  rep.dimension = words.size();
  rep.basis_words = std::move(words);
  rep.presentation = std::move(p);
  return rep;
}

Subspace epicenter_from(const Presentation& p, const std::vector<EchelonBuilder>& tower, std::size_t n) {
  const auto& f = *p.ambient;
  const std::size_t c = p.weight;
  // Preimage of Z_j(Q) is D_{c-j} plus its intersection with the coordinate
  // complement of D_{c-j}; only that complement part is solved for.
  EchelonBuilder preimage = tower[c];
  std::vector<std::size_t> comp;
  Subspace solutions(0);
  for (std::size_t j = 1; j <= c; ++j) {
    const EchelonBuilder& base = tower[c - j];
    comp = base.non_pivots();
    std::vector<SparseVector> images;  // column q, stacked over generators
    for (std::size_t q : comp) {
      SparseVector col;
      for (std::size_t g = 0; g < f.rank(); ++g)
        for (auto& [k, x] : preimage.reduce(f.bracket_with_word(unit(q), g))) col.emplace_back(g * f.dim() + k, x);
      images.push_back(std::move(col));
    }
    std::vector<std::size_t> used;
    for (const auto& col : images)
      for (const auto& e : col) used.push_back(e.first);
    std::sort(used.begin(), used.end());
    used.erase(std::unique(used.begin(), used.end()), used.end());
    Matrix m(used.size(), comp.size());
    for (std::size_t a = 0; a < comp.size(); ++a)
      for (const auto& [k, x] : images[a])
        m(static_cast<std::size_t>(std::lower_bound(used.begin(), used.end(), k) - used.begin()), a) = x;
    solutions = kernel(m);

    EchelonBuilder next = base;
    for (std::size_t r = 0; r < solutions.dim(); ++r) {
      SparseVector v;
      for (std::size_t a = 0; a < comp.size(); ++a)
        if (sgn(solutions.basis()(r, a)) != 0) v.emplace_back(comp[a], solutions.basis()(r, a));
      next.insert(v);
    }
    preimage = std::move(next);
  }
  // D_0 = R maps to zero, so the image is spanned by the complement solutions.
  Matrix image(0, n);
  std::vector<Rational> acc(n);
  for (std::size_t r = 0; r < solutions.dim(); ++r) {
    std::fill(acc.begin(), acc.end(), Rational(0));
    for (std::size_t a = 0; a < comp.size(); ++a) {
      const Rational& x = solutions.basis()(r, a);
      if (sgn(x) == 0) continue;
      for (std::size_t i = 0; i < n; ++i) acc[i] += x * p.onto_map(i, comp[a]);
    }
    image.append_row(acc);
  }
  return Subspace::span(image);
}

}  // namespace

Presentation present(const LieAlgebra& l, std::size_t c, const PresentOptions& options) {
  check_weight(c, options);
  const std::size_t n = l.dim();
  const auto rep = series(l);
  if (!rep.nilpotent()) {
    std::string dims;
    for (const auto& s : rep.lower_central) dims += (dims.empty() ? "" : ", ") + std::to_string(s.dim());
    throw NotNilpotent(l.name() + " is not nilpotent; lower central series dimensions stabilise at [" + dims + "]");
  }
  const Subspace& derived = rep.lower(2);
  const std::size_t d = n - derived.dim();
  if (d == 0) throw std::invalid_argument("present: algebra has no generators (dim L/L^2 = 0)");

  Presentation p;
  p.weight = c;
  p.algebra_class = *rep.nilpotency_class;
  if (options.lift) {
    const Matrix& lift = *options.lift;
    if (lift.rows() != d || lift.cols() != n)
      throw DimensionMismatch("present: lift must be " + std::to_string(d) + " x " + std::to_string(n));
    Matrix stacked = lift;
    for (std::size_t r = 0; r < derived.dim(); ++r) stacked.append_row(derived.basis().row(r));
    if (rref(stacked).rank != n) throw std::invalid_argument("present: lift does not span L modulo L^2");
    p.lift = lift;
    p.lift.canonicalize();
  } else {
    p.lift = Matrix(0, n);
    for (std::size_t q : derived.non_pivots()) {
      std::vector<Rational> e(n);
      e[q] = 1;
      p.lift.append_row(e);
    }
  }

  p.ambient = free_nilpotent(d, p.algebra_class + c, options.cap);
  const auto& f = *p.ambient;
  std::vector<std::vector<Rational>> image(f.dim());
  for (std::size_t w = 0; w < f.dim(); ++w) {
    const HallWord& hw = f.basis()[w];
    if (hw.is_leaf()) {
      auto row = p.lift.row(hw.generator);
      image[w].assign(row.begin(), row.end());
    } else {
      image[w] = l.bracket(image[hw.left], image[hw.right]);
    }
  }
  p.onto_map = Matrix(n, f.dim());
  for (std::size_t w = 0; w < f.dim(); ++w)
    for (std::size_t i = 0; i < n; ++i) p.onto_map(i, w) = image[w][i];
  p.relations = kernel(p.onto_map);
  return p;
}

Subspace subideal_bracket(const Subspace& s, const FreeNilpotentAlgebra& ambient, std::size_t depth) {
  if (s.ambient_dim() != ambient.dim()) throw DimensionMismatch("subideal_bracket: subspace is not in the ambient");
  EchelonBuilder current(s);
  for (std::size_t t = 0; t < depth; ++t) {
    // Generators suffice for ideals; otherwise bracket with every word.
    bool ideal = true;
    for (const auto& row : current.rows()) {
      for (std::size_t g = 0; g < ambient.rank() && ideal; ++g)
        ideal = current.contains(ambient.bracket_with_word(row, g));
      if (!ideal) break;
    }
    const std::size_t width = ideal ? ambient.rank() : ambient.dim();
    EchelonBuilder next(ambient.dim());
    for (const auto& row : current.rows())
      for (std::size_t w = 0; w < width; ++w) next.insert(ambient.bracket_with_word(row, w));
    current = std::move(next);
  }
  return current.finish();
}

std::vector<std::string> MultiplierReport::words() const {
  std::vector<std::string> out;
  for (std::size_t w : basis_words) out.push_back(presentation.ambient->word(w));
  return out;
}

MultiplierReport nilpotent_multiplier(const LieAlgebra& l, std::size_t c, const PresentOptions& options) {
  Presentation p = present(l, c, options);
  const auto tower = bracket_tower(p, c);
  return multiplier_from(std::move(p), tower);
}

Subspace z_star(const LieAlgebra& l, std::size_t c, const PresentOptions& options) {
  return analyze(l, c, options).epicenter;
}

Analysis analyze(const LieAlgebra& l, std::size_t c, const PresentOptions& options) {
  Presentation p = present(l, c, options);
  const auto tower = bracket_tower(p, c);
  Subspace epi = epicenter_from(p, tower, l.dim());
  return {multiplier_from(std::move(p), tower), std::move(epi)};
}

bool is_capable(const LieAlgebra& l) { return z_star(l, 1).is_zero(); }
bool is_two_capable(const LieAlgebra& l) { return z_star(l, 2).is_zero(); }

BoundReport bound_report(const LieAlgebra& l, const PresentOptions& options) {
  const auto rep = series(l);
  if (!rep.nilpotent()) throw NotNilpotent("bound_report: " + l.name() + " is not nilpotent");
  return make_bound_report(l.dim(), rep.lower(2).dim(), rep.lower(3).dim(),
                           nilpotent_multiplier(l, 2, options).dimension);
}

BoundReport make_bound_report(std::size_t dim, std::size_t derived_dim, std::size_t cube_dim,
                              std::size_t multiplier_dim) {
  BoundReport b;
  b.dim = dim;
  b.derived_dim = derived_dim;
  b.cube_dim = cube_dim;
  b.multiplier_dim = multiplier_dim;
  b.value = multiplier_dim + cube_dim;
  b.general = general_bound(static_cast<std::int64_t>(dim));
  b.general_slack = static_cast<std::int64_t>(b.general) - static_cast<std::int64_t>(b.value);
  b.abelian = derived_dim == 0;
  if (!b.abelian) {
    b.refined = refined_bound(static_cast<std::int64_t>(dim), static_cast<std::int64_t>(derived_dim));
    b.refined_slack = static_cast<std::int64_t>(*b.refined) - static_cast<std::int64_t>(multiplier_dim);
  }
  return b;
}

bool BoundReport::consistent() const {
  if (general_slack < 0) return false;
  if (refined_slack && *refined_slack < 0) return false;
  return saturates_general() == abelian;
}

}  // namespace nilmul
