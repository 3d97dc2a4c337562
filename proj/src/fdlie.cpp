#include "nilmul/fdlie.hpp"

#include <algorithm>
#include <set>

namespace nilmul {

namespace {

SparseVector normalized(SparseVector v, std::size_t dim, std::size_t i, std::size_t j) {
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVector out;
  for (auto& [k, x] : v) {
    if (k >= dim)
      throw ValidationError(ValidationError::Kind::Shape,
                            "bracket (" + std::to_string(i) + "," + std::to_string(j) + ") refers to basis index " +
                                std::to_string(k) + " outside dimension " + std::to_string(dim),
                            {i, j, k});
    x.canonicalize();
    if (!out.empty() && out.back().first == k)
      out.back().second += x;
    else
      out.emplace_back(k, x);
  }
  std::erase_if(out, [](const auto& e) { return sgn(e.second) == 0; });
  return out;
}

SparseVector negated(SparseVector v) {
  for (auto& e : v) e.second = -e.second;
  return v;
}

void add_scaled(std::vector<Rational>& acc, const SparseVector& v, const Rational& f) {
  for (const auto& [k, x] : v) acc[k] += f * x;
}

std::string unique_label(std::string label, const std::set<std::string>& taken) {
  while (taken.contains(label)) label += "'";
  return label;
}

}  // namespace

RawTable::RawTable(std::size_t dim, std::string name_)
    : name(std::move(name_)), labels(dim), entries(dim * dim) {
  for (std::size_t i = 0; i < dim; ++i) labels[i] = "e" + std::to_string(i + 1);
}

void RawTable::set_antisymmetric(std::size_t i, std::size_t j, const SparseVector& value) {
  at(i, j) = value;
  at(j, i) = negated(value);
}

LieAlgebra LieAlgebra::validate(RawTable raw) {
  const std::size_t n = raw.dim();
  if (raw.entries.size() != n * n)
    throw ValidationError(ValidationError::Kind::Shape, "structure table is not square", {0, 0, 0});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) raw.at(i, j) = normalized(std::move(raw.at(i, j)), n, i, j);

  auto name_of = [&](std::size_t i) { return raw.labels[i]; };
  for (std::size_t i = 0; i < n; ++i) {
    if (!raw.at(i, i).empty())
      throw ValidationError(ValidationError::Kind::Antisymmetry,
                            "antisymmetry fails: [" + name_of(i) + "," + name_of(i) + "] != 0", {i, i, i});
    for (std::size_t j = i + 1; j < n; ++j)
      if (raw.at(i, j) != negated(raw.at(j, i)))
        throw ValidationError(ValidationError::Kind::Antisymmetry,
                              "antisymmetry fails at (" + std::to_string(i) + "," + std::to_string(j) + "): [" +
                                  name_of(i) + "," + name_of(j) + "] != -[" + name_of(j) + "," + name_of(i) + "]",
                              {i, j, j});
  }

  LieAlgebra l;
  l.name_ = std::move(raw.name);
  l.labels_ = std::move(raw.labels);
  l.table_ = std::move(raw.entries);

  // [[a,b],c] for basis elements
  auto triple = [&](std::size_t a, std::size_t b, std::size_t c, std::vector<Rational>& acc) {
    for (const auto& [k, x] : l.bracket(a, b)) add_scaled(acc, l.bracket(k, c), x);
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        std::vector<Rational> acc(n);
        triple(i, j, k, acc);
        triple(j, k, i, acc);
        triple(k, i, j, acc);
        if (!is_zero(acc))
          throw ValidationError(ValidationError::Kind::Jacobi,
                                "Jacobi identity fails on (" + l.labels_[i] + "," + l.labels_[j] + "," +
                                    l.labels_[k] + ")",
                                {i, j, k});
      }
  return l;
}

std::vector<Rational> LieAlgebra::bracket(std::span<const Rational> x, std::span<const Rational> y) const {
  const std::size_t n = dim();
  if (x.size() != n || y.size() != n) throw DimensionMismatch("bracket: vector length differs from algebra dimension");
  std::vector<Rational> out(n);
  Rational f;
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(y[j]) == 0) continue;
      const auto& b = bracket(i, j);
      if (b.empty()) continue;
      f = x[i] * y[j];
      add_scaled(out, b, f);
    }
  }
  return out;
}

bool LieAlgebra::is_abelian() const {
  return std::all_of(table_.begin(), table_.end(), [](const SparseVector& v) { return v.empty(); });
}

LieAlgebra LieAlgebra::renamed(std::string name) const {
  LieAlgebra copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

// ---------------------------------------------------------------- constructors

LieAlgebra abelian(std::size_t n) { return LieAlgebra::validate(RawTable(n, "A(" + std::to_string(n) + ")")); }

LieAlgebra heisenberg(std::size_t m) {
  if (m == 0) throw std::invalid_argument("heisenberg: m must be at least 1");
  RawTable raw(2 * m + 1, "H(" + std::to_string(m) + ")");
  for (std::size_t i = 0; i < m; ++i) {
    raw.labels[2 * i] = "x" + std::to_string(i + 1);
    raw.labels[2 * i + 1] = "y" + std::to_string(i + 1);
    raw.set_antisymmetric(2 * i, 2 * i + 1, {{2 * m, Rational(1)}});
  }
  raw.labels[2 * m] = "z";
  return LieAlgebra::validate(std::move(raw));
}

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
  const std::size_t na = a.dim(), nb = b.dim();
  RawTable raw(na + nb, a.name() + "+" + b.name());
  std::set<std::string> taken(a.labels().begin(), a.labels().end());
  for (std::size_t i = 0; i < na; ++i) raw.labels[i] = a.labels()[i];
  for (std::size_t i = 0; i < nb; ++i) {
    raw.labels[na + i] = unique_label(b.labels()[i], taken);
    taken.insert(raw.labels[na + i]);
  }
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j) raw.at(i, j) = a.bracket(i, j);
  for (std::size_t i = 0; i < nb; ++i)
    for (std::size_t j = 0; j < nb; ++j) {
      SparseVector v = b.bracket(i, j);
      for (auto& e : v) e.first += na;
      raw.at(na + i, na + j) = std::move(v);
    }
  return LieAlgebra::validate(std::move(raw));
}

LieAlgebra as_lie_algebra(const FreeNilpotentAlgebra& f) {
  RawTable raw(f.dim(), "F(" + std::to_string(f.rank()) + "," + std::to_string(f.nilpotency_class()) + ")");
  for (std::size_t i = 0; i < f.dim(); ++i) {
    raw.labels[i] = f.word(i);
    for (std::size_t j = 0; j < f.dim(); ++j)
      for (const auto& [w, a] : f.bracket(i, j)) raw.at(i, j).emplace_back(w, Rational(a));
  }
  return LieAlgebra::validate(std::move(raw));
}

LieAlgebra change_basis(const LieAlgebra& l, const Matrix& change) {
  const std::size_t n = l.dim();
  if (change.rows() != n || change.cols() != n) throw DimensionMismatch("change_basis: matrix must be n x n");
  Matrix basis = change;
  basis.canonicalize();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) aug(i, k) = basis(i, k);
    aug(i, n + i) = 1;
  }
  auto e = rref(std::move(aug));
  if (e.rank < n || (n > 0 && e.pivots[n - 1] != n - 1))
    throw std::invalid_argument("change_basis: matrix is singular");
  // inverse(i, k) = e.reduced(i, n + k)
  RawTable raw(n, l.name());
  raw.labels = l.labels();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      auto v = l.bracket(basis.row(i), basis.row(j));
      std::vector<Rational> coords(n);
      for (std::size_t k = 0; k < n; ++k) {
        if (sgn(v[k]) == 0) continue;
        for (std::size_t t = 0; t < n; ++t) coords[t] += v[k] * e.reduced(k, n + t);
      }
      raw.set_antisymmetric(i, j, to_sparse(coords));
    }
  return LieAlgebra::validate(std::move(raw));
}

// ---------------------------------------------------------------- series

Subspace bracket_span(const LieAlgebra& l, const Subspace& u, const Subspace& v) {
  const std::size_t n = l.dim();
  Matrix gens(0, n);
  for (std::size_t r = 0; r < u.dim(); ++r)
    for (std::size_t s = 0; s < v.dim(); ++s) {
      auto b = l.bracket(u.basis().row(r), v.basis().row(s));
      if (!is_zero(b)) gens.append_row(b);
    }
  return Subspace::span(gens);
}

Subspace next_center(const LieAlgebra& l, const Subspace& prev) {
  const std::size_t n = l.dim();
  // Column j holds ([e_j, e_i] mod prev) stacked over i.
  Matrix m(n * n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) {
      auto res = prev.reduce(to_dense(l.bracket(j, i), n));
      for (std::size_t k = 0; k < n; ++k) m(i * n + k, j) = res[k];
    }
  return kernel(m);
}

SeriesReport series(const LieAlgebra& l) {
  const std::size_t n = l.dim();
  SeriesReport rep;
  const Subspace whole = Subspace::full(n);
  rep.lower_central.push_back(whole);
  while (true) {
    Subspace next = bracket_span(l, rep.lower_central.back(), whole);
    if (next == rep.lower_central.back()) break;
    rep.lower_central.push_back(std::move(next));
  }
  rep.upper_central.push_back(Subspace(n));
  while (true) {
    Subspace next = next_center(l, rep.upper_central.back());
    if (next == rep.upper_central.back()) break;
    rep.upper_central.push_back(std::move(next));
  }
  if (rep.lower_central.back().is_zero()) {
    // gamma_{k+1} = 0 != gamma_k
    rep.nilpotency_class = n == 0 ? 0 : rep.lower_central.size() - 1;
  }
  return rep;
}

const Subspace& SeriesReport::lower(std::size_t k) const {
  if (k == 0) throw std::out_of_range("lower central series starts at gamma_1");
  return lower_central[std::min(k - 1, lower_central.size() - 1)];
}

const Subspace& SeriesReport::upper(std::size_t k) const {
  return upper_central[std::min(k, upper_central.size() - 1)];
}

// ---------------------------------------------------------------- quotients

bool is_ideal(const LieAlgebra& l, const Subspace& ideal) {
  for (std::size_t r = 0; r < ideal.dim(); ++r)
    for (std::size_t j = 0; j < l.dim(); ++j) {
      std::vector<Rational> e(l.dim());
      e[j] = 1;
      if (!ideal.contains(l.bracket(ideal.basis().row(r), e))) return false;
    }
  return true;
}

LieAlgebra quotient(const LieAlgebra& l, const Subspace& ideal) {
  const std::size_t n = l.dim();
  if (ideal.ambient_dim() != n) throw DimensionMismatch("quotient: ideal lives in a different space");
  for (std::size_t r = 0; r < ideal.dim(); ++r)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Rational> e(n);
      e[j] = 1;
      if (!ideal.contains(l.bracket(ideal.basis().row(r), e)))
        throw NotAnIdeal("quotient: subspace is not an ideal; [row " + std::to_string(r) + ", " + l.labels()[j] +
                             "] escapes it",
                         r, j);
    }
  const auto keep = ideal.non_pivots();
  RawTable raw(keep.size(), ideal.is_zero() ? l.name() : l.name() + "/I");
  for (std::size_t a = 0; a < keep.size(); ++a) raw.labels[a] = l.labels()[keep[a]];
  for (std::size_t a = 0; a < keep.size(); ++a)
    for (std::size_t b = a + 1; b < keep.size(); ++b) {
      auto res = ideal.reduce(to_dense(l.bracket(keep[a], keep[b]), n));
      SparseVector v;
      for (std::size_t t = 0; t < keep.size(); ++t)
        if (sgn(res[keep[t]]) != 0) v.emplace_back(t, res[keep[t]]);
      raw.set_antisymmetric(a, b, v);
    }
  return LieAlgebra::validate(std::move(raw));
}

// ---------------------------------------------------------------- dim L^2 = 1

DerivedDimOne recognize_derived_dim_one(const LieAlgebra& l) {
  const std::size_t n = l.dim();
  const auto rep = series(l);
  if (!rep.nilpotent()) throw NotNilpotent("recognize_derived_dim_one: algebra is not nilpotent");
  const Subspace& derived = rep.lower(2);
  if (derived.dim() != 1)
    throw std::invalid_argument("recognize_derived_dim_one: dim L^2 = " + std::to_string(derived.dim()) +
                                ", expected 1");
  const std::size_t p = derived.pivots()[0];
  Matrix form(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& [k, x] : l.bracket(i, j))
        if (k == p) form(i, j) = x;
  const std::size_t rank = rref(form).rank;
  return {rank / 2, n - rank - 1};
}

}  // namespace nilmul
