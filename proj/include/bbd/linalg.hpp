// Exact rational linear algebra: row reduction, kernels and finite
// dimensional subspaces of Q^n.
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "bbd/poly.hpp"

namespace bbd {

using Vector = std::vector<Rational>;
using Matrix = std::vector<Vector>;  // row-major

/// In-place reduced row echelon form; zero rows are removed. Returns the
/// pivot column of each remaining row.
std::vector<std::size_t> rref(Matrix& m, std::size_t ncols);
std::size_t rank(Matrix m, std::size_t ncols);
/// Basis of {x : m x = 0}.
Matrix kernel(const Matrix& m, std::size_t ncols);

Rational dot(const Vector& a, const Vector& b);

/// A subspace of Q^ambient_dim kept as a reduced row echelon basis, so two
/// subspaces are equal iff their bases are identical.
class LinearSubspace {
 public:
  explicit LinearSubspace(std::size_t ambient_dim = 0) : ambient_(ambient_dim) {}
  LinearSubspace(std::size_t ambient_dim, Matrix spanning);

  static LinearSubspace full(std::size_t ambient_dim);
  static LinearSubspace coordinate(std::size_t ambient_dim, const std::vector<std::size_t>& axes);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const Matrix& basis() const { return basis_; }

  bool contains(const Vector& v) const;
  bool contains(const LinearSubspace& other) const;
  /// Orthogonal complement under the standard pairing.
  LinearSubspace annihilator() const;
  /// Coordinates of v (which must lie in the subspace) against basis().
  Vector coordinates(const Vector& v) const;

  friend bool operator==(const LinearSubspace& a, const LinearSubspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

LinearSubspace subspace_intersect(const LinearSubspace& a, const LinearSubspace& b);
LinearSubspace subspace_sum(const LinearSubspace& a, const LinearSubspace& b);

std::string format_vector(const Vector& v);

}  // namespace bbd
