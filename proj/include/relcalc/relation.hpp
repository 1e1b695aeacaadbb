#pragma once

#include <utility>
#include <vector>

#include "relcalc/subspace.hpp"
#include "relcalc/types.hpp"

namespace relcalc {

/// A linear relation in C^n: a subspace of C^n ⊕ C^n whose elements are
/// read as pairs (f, g) with f the top half and g the bottom half. The graph
/// of an operator is the special case mul = {0}, dom = C^n.
class LinearRelation {
 public:
  /// graph.ambient_dim() must equal 2 * space_dim.
  LinearRelation(Index space_dim, Subspace graph);

  static LinearRelation from_operator(const Matrix& m, double tol = kDefaultTol);
  static LinearRelation from_pairs(Index space_dim,
                                   const std::vector<std::pair<Vector, Vector>>& pairs,
                                   double tol = kDefaultTol);
  /// Spans the columns of a 2n x k stacked matrix (not required orthonormal).
  static LinearRelation from_graph_columns(Index space_dim, const Matrix& stacked,
                                           double tol = kDefaultTol);
  static LinearRelation zero(Index space_dim, double tol = kDefaultTol);
  static LinearRelation identity(Index space_dim, double tol = kDefaultTol);

  Index space_dim() const { return space_dim_; }
  Index dim() const { return graph_.dim(); }
  const Subspace& graph() const { return graph_; }
  double tol() const { return graph_.tol(); }

  /// Top-half matrix B1 (n x d) of the orthonormal graph basis.
  Matrix top() const { return graph_.basis().topRows(space_dim_); }
  /// Bottom-half matrix B2 (n x d).
  Matrix bottom() const { return graph_.basis().bottomRows(space_dim_); }

 private:
  Index space_dim_;
  Subspace graph_;
};

struct RelationParts {
  Subspace dom, ran, ker, mul;
};

RelationParts parts(const LinearRelation& t);

/// T + S = {(f, g+h) : (f,g) ∈ T, (f,h) ∈ S}. The shared-f constraint is
/// solved through the nullspace of [B1_T, -B1_S], not by concatenating bases.
LinearRelation add(const LinearRelation& t, const LinearRelation& s);

/// ζT = {(f, ζg) : (f,g) ∈ T}.
LinearRelation scale(Complex zeta, const LinearRelation& t);

/// ST = {(f, k) : (f,g) ∈ T, (g,k) ∈ S}; middle-vector agreement is solved
/// through the nullspace of [B2_T, -B1_S].
LinearRelation compose(const LinearRelation& s, const LinearRelation& t);

/// T^{-1} = {(g, f) : (f,g) ∈ T}.
LinearRelation inverse(const LinearRelation& t);

/// T^* = {(h,k) : <k,f> = <h,g> for all (f,g) ∈ T}, computed as the
/// orthogonal complement of {(g, -f) : (f,g) ∈ T} in C^{2n}.
LinearRelation adjoint(const LinearRelation& t);

struct Decomposition {
  LinearRelation operator_part;     // T ⊖ T_inf
  LinearRelation multivalued_part;  // T_inf = {(0, g) ∈ T}
};

Decomposition decompose(const LinearRelation& t);

/// T_S = T ∩ [(mul S)^⊥ ⊕ (mul S)^⊥].
LinearRelation reduce(const LinearRelation& t, const LinearRelation& s);

/// T - ζI = {(f, g - ζf) : (f,g) ∈ T}.
LinearRelation shift(const LinearRelation& t, Complex zeta);

/// ker(T - λI) as a subspace of C^n.
Subspace eigenspace(const LinearRelation& t, Complex lambda);

/// {(f, ζf) : f ∈ C^n}, the graph of ζ·I, as a subspace of C^{2n}.
Subspace scalar_pencil(Index space_dim, Complex zeta, double tol = kDefaultTol);

SubspaceOrder compare(const LinearRelation& a, const LinearRelation& b);
bool equal(const LinearRelation& a, const LinearRelation& b);

}  // namespace relcalc
