#include "nilmul/exactlin.hpp"

#include <algorithm>
#include <cctype>

namespace nilmul {

Rational ratio(long num, long den) {
  if (den == 0) throw std::invalid_argument("ratio: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto valid_int = [](std::string_view t, bool allow_sign) {
    if (t.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (t[0] == '-' || t[0] == '+')) i = 1;
    if (i == t.size()) return false;
    return std::all_of(t.begin() + static_cast<std::ptrdiff_t>(i), t.end(),
                       [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)) != 0; });
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num, true) || !valid_int(den, false))
    throw std::invalid_argument("not a rational number: \"" + s + "\"");
  if (num[0] == '+') num.erase(0, 1);
  mpz_class p(num, 10), q(den, 10);
  if (q == 0) throw std::invalid_argument("zero denominator: \"" + s + "\"");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::vector<Rational> to_dense(const SparseVector& v, std::size_t n) {
  std::vector<Rational> out(n);
  for (const auto& [i, x] : v) out.at(i) = x;
  return out;
}

SparseVector to_sparse(std::span<const Rational> v) {
  SparseVector out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (sgn(v[i]) != 0) out.emplace_back(i, v[i]);
  return out;
}

bool is_zero(std::span<const Rational> v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; });
}

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionMismatch("ragged matrix literal");
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Rational>>& rows, std::size_t cols) {
  Matrix m(0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

void Matrix::append_row(std::span<const Rational> values) {
  if (values.size() != cols_) throw DimensionMismatch("row length does not match column count");
  entries_.insert(entries_.end(), values.begin(), values.end());
  ++rows_;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

void Matrix::canonicalize() {
  for (auto& x : entries_) x.canonicalize();
}

// ---------------------------------------------------------------- rref

RowEchelon rref(Matrix m) {
  m.canonicalize();
  const std::size_t rows = m.rows(), cols = m.cols();
  RowEchelon out;
  std::size_t r = 0;
  std::vector<std::size_t> support;
  Rational f;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = r;
    while (sel < rows && sgn(m(sel, c)) == 0) ++sel;
    if (sel == rows) continue;
    if (sel != r)
      for (std::size_t k = c; k < cols; ++k) swap(m(sel, k), m(r, k));

    support.clear();
    const Rational inv = 1 / m(r, c);
    for (std::size_t k = c; k < cols; ++k) {
      if (sgn(m(r, k)) == 0) continue;
      m(r, k) *= inv;
      support.push_back(k);
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(m(i, c)) == 0) continue;
      f = m(i, c);
      for (std::size_t k : support) m(i, k) -= f * m(r, k);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;
  out.reduced = Matrix(0, cols);
  for (std::size_t i = 0; i < r; ++i) out.reduced.append_row(m.row(i));
  return out;
}

// ---------------------------------------------------------------- Subspace

Subspace::Subspace(std::size_t ambient_dim) : ambient_(ambient_dim), basis_(0, ambient_dim) {}

Subspace Subspace::span(const Matrix& generators) {
  Subspace s(generators.cols());
  auto e = rref(generators);
  s.basis_ = std::move(e.reduced);
  s.pivots_ = std::move(e.pivots);
  return s;
}

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<SparseVector>& generators) {
  EchelonBuilder b(ambient_dim);
  for (const auto& g : generators) b.insert(g);
  return b.finish();
}

Subspace Subspace::full(std::size_t n) {
  Subspace s(n);
  s.basis_ = Matrix::identity(n);
  for (std::size_t i = 0; i < n; ++i) s.pivots_.push_back(i);
  return s;
}

Subspace Subspace::coordinate(std::size_t n, std::span<const std::size_t> indices) {
  std::vector<std::size_t> idx(indices.begin(), indices.end());
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  Subspace s(n);
  for (std::size_t i : idx) {
    if (i >= n) throw DimensionMismatch("coordinate index out of range");
    std::vector<Rational> row(n);
    row[i] = 1;
    s.basis_.append_row(row);
    s.pivots_.push_back(i);
  }
  return s;
}

std::vector<Rational> Subspace::reduce(std::span<const Rational> v) const {
  if (v.size() != ambient_) throw DimensionMismatch("vector length does not match ambient dimension");
  std::vector<Rational> out(v.begin(), v.end());
  Rational f;
  for (std::size_t r = 0; r < dim(); ++r) {
    f = out[pivots_[r]];
    if (sgn(f) == 0) continue;
    auto row = basis_.row(r);
    for (std::size_t k = pivots_[r]; k < ambient_; ++k)
      if (sgn(row[k]) != 0) out[k] -= f * row[k];
  }
  return out;
}

bool Subspace::contains(std::span<const Rational> v) const { return nilmul::is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw DimensionMismatch("ambient dimensions differ");
  for (std::size_t r = 0; r < other.dim(); ++r)
    if (!contains(other.basis_.row(r))) return false;
  return true;
}

std::vector<Rational> Subspace::coordinates(std::span<const Rational> v) const {
  std::vector<Rational> out;
  out.reserve(dim());
  for (std::size_t p : pivots_) out.push_back(v[p]);
  return out;
}

std::vector<std::size_t> Subspace::non_pivots() const {
  std::vector<std::size_t> out;
  std::size_t next = 0;
  for (std::size_t i = 0; i < ambient_; ++i) {
    if (next < pivots_.size() && pivots_[next] == i) {
      ++next;
      continue;
    }
    out.push_back(i);
  }
  return out;
}

Subspace kernel(const Matrix& m) {
  const auto e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : e.pivots) is_pivot[p] = true;
  EchelonBuilder b(m.cols());
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    SparseVector v;
    for (std::size_t r = 0; r < e.rank; ++r)
      if (sgn(e.reduced(r, f)) != 0) v.emplace_back(e.pivots[r], -e.reduced(r, f));
    v.emplace_back(f, Rational(1));
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    b.insert(v);
  }
  return b.finish();
}

Subspace sum(const Subspace& u, const Subspace& w) {
  if (u.ambient_dim() != w.ambient_dim()) throw DimensionMismatch("sum: ambient dimensions differ");
  Matrix stacked = u.basis();
  for (std::size_t r = 0; r < w.dim(); ++r) stacked.append_row(w.basis().row(r));
  return Subspace::span(stacked);
}

Subspace intersect(const Subspace& u, const Subspace& w) {
  if (u.ambient_dim() != w.ambient_dim()) throw DimensionMismatch("intersect: ambient dimensions differ");
  const std::size_t n = u.ambient_dim();
  if (u.is_zero() || w.is_zero()) return Subspace(n);
  // Zassenhaus: rows (u|u) and (w|0); rows with vanishing left half carry u∩w.
  Matrix z(0, 2 * n);
  std::vector<Rational> row(2 * n);
  for (std::size_t r = 0; r < u.dim(); ++r) {
    for (std::size_t k = 0; k < n; ++k) row[k] = row[n + k] = u.basis()(r, k);
    z.append_row(row);
  }
  for (std::size_t r = 0; r < w.dim(); ++r) {
    for (std::size_t k = 0; k < n; ++k) {
      row[k] = w.basis()(r, k);
      row[n + k] = 0;
    }
    z.append_row(row);
  }
  const auto e = rref(std::move(z));
  Matrix meet(0, n);
  for (std::size_t r = 0; r < e.rank; ++r) {
    if (e.pivots[r] < n) continue;
    meet.append_row(e.reduced.row(r).subspan(n));
  }
  return Subspace::span(meet);
}

Subspace intersect_tail(const Subspace& u, std::size_t start) {
  Matrix tail(0, u.ambient_dim());
  for (std::size_t r = 0; r < u.dim(); ++r)
    if (u.pivots()[r] >= start) tail.append_row(u.basis().row(r));
  return Subspace::span(tail);
}

std::size_t quotient_dim(const Subspace& u, const Subspace& w) {
  if (u.ambient_dim() != w.ambient_dim()) throw DimensionMismatch("quotient: ambient dimensions differ");
  for (std::size_t r = 0; r < w.dim(); ++r) {
    auto v = w.basis().row(r);
    if (!u.contains(v))
      throw NotContained("quotient: divisor is not contained in the dividend",
                         std::vector<Rational>(v.begin(), v.end()));
  }
  return u.dim() - w.dim();
}

// ---------------------------------------------------------------- EchelonBuilder

EchelonBuilder::EchelonBuilder(std::size_t ambient_dim) : ambient_(ambient_dim), pivot_row_(ambient_dim, npos) {}

EchelonBuilder::EchelonBuilder(const Subspace& start) : EchelonBuilder(start.ambient_dim()) {
  for (std::size_t r = 0; r < start.dim(); ++r) {
    pivot_row_[start.pivots()[r]] = rows_.size();
    rows_.push_back(to_sparse(start.basis().row(r)));
  }
}

void EchelonBuilder::reduce_dense(std::vector<Rational>& acc, std::size_t from) const {
  Rational f;
  for (std::size_t col = from; col < ambient_; ++col) {
    if (pivot_row_[col] == npos || sgn(acc[col]) == 0) continue;
    f = acc[col];
    for (const auto& [j, x] : rows_[pivot_row_[col]]) acc[j] -= f * x;
  }
}

SparseVector EchelonBuilder::reduce(const SparseVector& v) const {
  if (v.empty()) return {};
  if (v.back().first >= ambient_) throw DimensionMismatch("vector index beyond ambient dimension");
  std::vector<Rational> acc = to_dense(v, ambient_);
  reduce_dense(acc, v.front().first);
  SparseVector out;
  for (std::size_t i = v.front().first; i < ambient_; ++i)
    if (sgn(acc[i]) != 0) out.emplace_back(i, std::move(acc[i]));
  return out;
}

bool EchelonBuilder::insert(const SparseVector& v) {
  SparseVector res = reduce(v);
  if (res.empty()) return false;
  const Rational inv = 1 / res.front().second;
  for (auto& entry : res) entry.second *= inv;
  pivot_row_[res.front().first] = rows_.size();
  rows_.push_back(std::move(res));
  return true;
}

bool EchelonBuilder::insert(std::span<const Rational> v) {
  if (v.size() != ambient_) throw DimensionMismatch("vector length does not match ambient dimension");
  return insert(to_sparse(v));
}

std::vector<std::size_t> EchelonBuilder::pivots() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < ambient_; ++i)
    if (pivot_row_[i] != npos) out.push_back(i);
  return out;
}

std::vector<std::size_t> EchelonBuilder::non_pivots() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < ambient_; ++i)
    if (pivot_row_[i] == npos) out.push_back(i);
  return out;
}

Subspace EchelonBuilder::finish() const {
  const auto piv = pivots();
  // Back-substitute from the highest pivot down; a fully reduced row has
  // zeros at every other pivot, so the original coefficients can be used.
  std::vector<std::vector<Rational>> reduced(piv.size());
  std::vector<std::size_t> slot(ambient_, npos);
  for (std::size_t k = 0; k < piv.size(); ++k) slot[piv[k]] = k;
  for (std::size_t k = piv.size(); k-- > 0;) {
    const SparseVector& row = rows_[pivot_row_[piv[k]]];
    std::vector<Rational> acc = to_dense(row, ambient_);
    for (const auto& [j, x] : row) {
      if (j == piv[k] || slot[j] == npos) continue;
      const auto& other = reduced[slot[j]];
      for (std::size_t i = j; i < ambient_; ++i)
        if (sgn(other[i]) != 0) acc[i] -= x * other[i];
    }
    reduced[k] = std::move(acc);
  }
  Subspace s(ambient_);
  for (std::size_t k = 0; k < piv.size(); ++k) s.basis_.append_row(reduced[k]);
  s.pivots_ = piv;
  return s;
}

}  // namespace nilmul
