#pragma once

#include <vector>

#include "relcalc/types.hpp"

namespace relcalc {

/// A linear subspace of C^m stored as an m x d matrix with orthonormal
/// columns plus the rank tolerance it was produced with.
///
/// Instances are immutable values; every operation on them is pure.
class Subspace {
 public:
  /// Wraps an already-orthonormal basis. Throws InvalidArgument if the
  /// columns fail basis^H basis = I within 10*tol entrywise, or on
  /// non-finite entries / inconsistent shapes.
  Subspace(Index ambient_dim, Matrix basis, double tol = kDefaultTol);

  static Subspace zero(Index ambient_dim, double tol = kDefaultTol);
  static Subspace full(Index ambient_dim, double tol = kDefaultTol);

  Index ambient_dim() const { return ambient_dim_; }
  Index dim() const { return basis_.cols(); }
  const Matrix& basis() const { return basis_; }
  double tol() const { return tol_; }

 private:
  Index ambient_dim_;
  Matrix basis_;
  double tol_;
};

/// Orthonormal basis of the linear hull of the given columns. Numerical rank
/// is the number of singular values above max(tol * sigma_max, 1e-13).
Subspace span(const Matrix& columns, double tol = kDefaultTol);
Subspace span(Index ambient_dim, const std::vector<Vector>& vectors,
              double tol = kDefaultTol);

Subspace sum(const Subspace& a, const Subspace& b);
Subspace complement(const Subspace& a);
/// a ∩ b, computed as complement(sum(complement(a), complement(b))).
Subspace intersect(const Subspace& a, const Subspace& b);
/// a ⊖ b = a ∩ b^⊥.
Subspace ominus(const Subspace& a, const Subspace& b);

/// v ∈ s iff ||v - P_s v|| <= tol * max(1, ||v||).
bool member(const Subspace& s, const Vector& v);

enum class SubspaceOrder { Equal, ASubsetB, BSubsetA, Incomparable };

SubspaceOrder compare(const Subspace& a, const Subspace& b);
bool equal(const Subspace& a, const Subspace& b);

Vector project(const Subspace& s, const Vector& v);
Matrix project(const Subspace& s, const Matrix& columns);

/// Largest principal angle between a and b, from the singular values of
/// basis_a^H basis_b. Returns pi/2 when the dimensions differ.
double largest_principal_angle(const Subspace& a, const Subspace& b);

}  // namespace relcalc
