#include "bbd/linalg.hpp"

#include <sstream>

#include "bbd/error.hpp"

namespace bbd {

std::vector<std::size_t> rref(Matrix& m, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < m.size(); ++col) {
    std::size_t p = row;
    while (p < m.size() && m[p][col] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[row], m[p]);
    Rational inv = 1 / m[row][col];
    for (auto& x : m[row]) x *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      Rational f = m[r][col];
      for (std::size_t c = col; c < ncols; ++c) m[r][c] -= f * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  m.resize(row);
  return pivots;
}

std::size_t rank(Matrix m, std::size_t ncols) { return rref(m, ncols).size(); }

Matrix kernel(const Matrix& m, std::size_t ncols) {
  for (const auto& r : m)
    if (r.size() != ncols) throw PreconditionError("kernel: row length mismatch");
  Matrix a = m;
  auto pivots = rref(a, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (auto p : pivots) is_pivot[p] = true;
  Matrix out;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    Vector v(ncols, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][free];
    out.push_back(std::move(v));
  }
  return out;
}

Rational dot(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw PreconditionError("dot: length mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

LinearSubspace::LinearSubspace(std::size_t ambient_dim, Matrix spanning) : ambient_(ambient_dim) {
  for (const auto& r : spanning)
    if (r.size() != ambient_dim) throw PreconditionError("subspace: vector length mismatch");
  basis_ = std::move(spanning);
  pivots_ = rref(basis_, ambient_);
}

LinearSubspace LinearSubspace::full(std::size_t ambient_dim) {
  std::vector<std::size_t> axes(ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) axes[i] = i;
  return coordinate(ambient_dim, axes);
}

LinearSubspace LinearSubspace::coordinate(std::size_t ambient_dim, const std::vector<std::size_t>& axes) {
  Matrix rows;
  for (auto a : axes) {
    Vector v(ambient_dim, 0);
    v.at(a) = 1;
    rows.push_back(std::move(v));
  }
  return LinearSubspace(ambient_dim, std::move(rows));
}

bool LinearSubspace::contains(const Vector& v) const {
  if (v.size() != ambient_) throw PreconditionError("subspace: vector length mismatch");
  Vector r = v;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const Rational f = r[pivots_[i]];
    if (f == 0) continue;
    for (std::size_t c = 0; c < ambient_; ++c) r[c] -= f * basis_[i][c];
  }
  for (const auto& x : r)
    if (x != 0) return false;
  return true;
}

bool LinearSubspace::contains(const LinearSubspace& other) const {
  for (const auto& v : other.basis_)
    if (!contains(v)) return false;
  return true;
}

LinearSubspace LinearSubspace::annihilator() const {
  return LinearSubspace(ambient_, kernel(basis_, ambient_));
}

Vector LinearSubspace::coordinates(const Vector& v) const {
  if (!contains(v)) throw PreconditionError("coordinates: vector outside subspace");
  Vector c(basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i) c[i] = v[pivots_[i]];
  return c;
}

LinearSubspace subspace_intersect(const LinearSubspace& a, const LinearSubspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw PreconditionError("subspace_intersect: dimension mismatch");
  // (U ∩ W) = ann(ann U + ann W)
  Matrix constraints = a.annihilator().basis();
  const Matrix bb = b.annihilator().basis();
  constraints.insert(constraints.end(), bb.begin(), bb.end());
  if (constraints.empty()) return LinearSubspace::full(a.ambient_dim());
  return LinearSubspace(a.ambient_dim(), kernel(constraints, a.ambient_dim()));
}

LinearSubspace subspace_sum(const LinearSubspace& a, const LinearSubspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw PreconditionError("subspace_sum: dimension mismatch");
  Matrix rows = a.basis();
  rows.insert(rows.end(), b.basis().begin(), b.basis().end());
  return LinearSubspace(a.ambient_dim(), std::move(rows));
}

std::string format_vector(const Vector& v) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << v[i].get_str();
  out << ")";
  return out.str();
}

}  // namespace bbd
