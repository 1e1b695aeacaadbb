#include "relcalc/relation.hpp"

#include <cmath>

#include "relcalc/errors.hpp"
#include "internal.hpp"

namespace relcalc {

using internal::all_finite;

LinearRelation::LinearRelation(Index space_dim, Subspace graph)
    : space_dim_(space_dim), graph_(std::move(graph)) {
  if (space_dim_ < 1) throw InvalidArgument("relation: space dimension must be positive");
  if (graph_.ambient_dim() != 2 * space_dim_)
    throw DimensionMismatch("relation: graph ambient dimension != 2n");
}

LinearRelation LinearRelation::from_operator(const Matrix& m, double tol) {
  const Index n = m.rows();
  if (n < 1 || m.cols() != n) throw InvalidArgument("from_operator: matrix must be square");
  if (!all_finite(m)) throw InvalidArgument("from_operator: non-finite entries");
  Matrix stacked(2 * n, n);
  stacked << Matrix::Identity(n, n), m;
  // Full column rank by construction; thin QR instead of a rank-revealing SVD.
  Eigen::HouseholderQR<Matrix> qr(stacked);
  Matrix q = qr.householderQ() * Matrix::Identity(2 * n, n);
  return LinearRelation(n, Subspace(2 * n, std::move(q), tol));
}

LinearRelation LinearRelation::from_pairs(
    Index space_dim, const std::vector<std::pair<Vector, Vector>>& pairs, double tol) {
  Matrix stacked(2 * space_dim, static_cast<Index>(pairs.size()));
  Index k = 0;
  for (const auto& [f, g] : pairs) {
    if (f.size() != space_dim || g.size() != space_dim)
      throw DimensionMismatch("from_pairs: pair dimension != n");
    stacked.col(k).head(space_dim) = f;
    stacked.col(k).tail(space_dim) = g;
    ++k;
  }
  return from_graph_columns(space_dim, stacked, tol);
}

LinearRelation LinearRelation::from_graph_columns(Index space_dim, const Matrix& stacked,
                                                  double tol) {
  if (stacked.rows() != 2 * space_dim)
    throw DimensionMismatch("from_graph_columns: expected 2n rows");
  if (stacked.cols() == 0)
    return LinearRelation(space_dim, Subspace::zero(2 * space_dim, tol));
  return LinearRelation(space_dim, span(stacked, tol));
}

LinearRelation LinearRelation::zero(Index space_dim, double tol) {
  return LinearRelation(space_dim, Subspace::zero(2 * space_dim, tol));
}

LinearRelation LinearRelation::identity(Index space_dim, double tol) {
  return from_operator(Matrix::Identity(space_dim, space_dim), tol);
}

RelationParts parts(const LinearRelation& t) {
  const Index n = t.space_dim();
  const double tol = t.tol();
  Subspace dom = span(Matrix(t.top()), tol);
  Subspace ran = span(Matrix(t.bottom()), tol);

  Matrix top_block(2 * n, n);
  top_block << Matrix::Identity(n, n), Matrix::Zero(n, n);
  Subspace ker_pairs = intersect(t.graph(), Subspace(2 * n, top_block, tol));
  Subspace ker = ker_pairs.dim() == 0
                     ? Subspace::zero(n, tol)
                     : span(Matrix(ker_pairs.basis().topRows(n)), tol);

  Matrix bottom_block(2 * n, n);
  bottom_block << Matrix::Zero(n, n), Matrix::Identity(n, n);
  Subspace mul_pairs = intersect(t.graph(), Subspace(2 * n, bottom_block, tol));
  Subspace mul = mul_pairs.dim() == 0
                     ? Subspace::zero(n, tol)
                     : span(Matrix(mul_pairs.basis().bottomRows(n)), tol);

  return RelationParts{std::move(dom), std::move(ran), std::move(ker), std::move(mul)};
}

LinearRelation add(const LinearRelation& t, const LinearRelation& s) {
  if (t.space_dim() != s.space_dim())
    throw DimensionMismatch("add: space dimensions differ");
  const Index n = t.space_dim();
  const double tol = std::max(t.tol(), s.tol());
  // Coefficient pairs (c, d) with B1_T c = B1_S d give the shared f.
  Matrix constraint(n, t.dim() + s.dim());
  constraint << t.top(), -s.top();
  Matrix null = internal::nullspace(constraint, tol);
  const Matrix c = null.topRows(t.dim());
  const Matrix d = null.bottomRows(s.dim());
  Matrix stacked(2 * n, null.cols());
  stacked.topRows(n) = t.top() * c;
  stacked.bottomRows(n) = t.bottom() * c + s.bottom() * d;
  return LinearRelation::from_graph_columns(n, stacked, tol);
}

LinearRelation scale(Complex zeta, const LinearRelation& t) {
  const Index n = t.space_dim();
  Matrix stacked(2 * n, t.dim());
  stacked.topRows(n) = t.top();
  stacked.bottomRows(n) = zeta * t.bottom();
  return LinearRelation::from_graph_columns(n, stacked, t.tol());
}

LinearRelation compose(const LinearRelation& s, const LinearRelation& t) {
  if (t.space_dim() != s.space_dim())
    throw DimensionMismatch("compose: space dimensions differ");
  const Index n = t.space_dim();
  const double tol = std::max(t.tol(), s.tol());
  // Middle-vector agreement: B2_T c = B1_S d.
  Matrix constraint(n, t.dim() + s.dim());
  constraint << t.bottom(), -s.top();
  Matrix null = internal::nullspace(constraint, tol);
  const Matrix c = null.topRows(t.dim());
  const Matrix d = null.bottomRows(s.dim());
  Matrix stacked(2 * n, null.cols());
  stacked.topRows(n) = t.top() * c;
  stacked.bottomRows(n) = s.bottom() * d;
  return LinearRelation::from_graph_columns(n, stacked, tol);
}

LinearRelation inverse(const LinearRelation& t) {
  const Index n = t.space_dim();
  Matrix swapped(2 * n, t.dim());
  swapped.topRows(n) = t.bottom();
  swapped.bottomRows(n) = t.top();
  return LinearRelation(n, Subspace(2 * n, std::move(swapped), t.tol()));
}

LinearRelation adjoint(const LinearRelation& t) {
  const Index n = t.space_dim();
  // {(g, -f)} keeps orthonormal columns, so T^* = that subspace's complement.
  Matrix neg_inv(2 * n, t.dim());
  neg_inv.topRows(n) = t.bottom();
  neg_inv.bottomRows(n) = -t.top();
  Subspace flipped(2 * n, std::move(neg_inv), t.tol());
  return LinearRelation(n, complement(flipped));
}

Decomposition decompose(const LinearRelation& t) {
  const Index n = t.space_dim();
  const double tol = t.tol();
  // mul T from the coefficient nullspace of B1; cheaper than the generic
  // lattice route and equal to it (see the unit tests).
  Matrix null = internal::nullspace(t.top(), tol);
  Matrix mul_vectors = t.bottom() * null;  // orthonormal: the pairs are (0, g)
  Matrix inf_basis(2 * n, mul_vectors.cols());
  inf_basis.topRows(n).setZero();
  inf_basis.bottomRows(n) = mul_vectors;
  Subspace inf_graph(2 * n, inf_basis, tol);

  // T_inf ⊆ T, so T ⊖ T_inf is the image of T under I - P_inf.
  Matrix op_stack = t.graph().basis() - inf_basis * (inf_basis.adjoint() * t.graph().basis());
  LinearRelation op = LinearRelation::from_graph_columns(n, op_stack, tol);
  return Decomposition{std::move(op), LinearRelation(n, std::move(inf_graph))};
}

LinearRelation reduce(const LinearRelation& t, const LinearRelation& s) {
  if (t.space_dim() != s.space_dim())
    throw DimensionMismatch("reduce: space dimensions differ");
  const Index n = t.space_dim();
  const double tol = std::max(t.tol(), s.tol());
  Subspace mul_s = parts(s).mul;
  Subspace k = complement(mul_s);
  Matrix kk(2 * n, 2 * k.dim());
  kk.setZero();
  kk.topLeftCorner(n, k.dim()) = k.basis();
  kk.bottomRightCorner(n, k.dim()) = k.basis();
  Subspace constraint(2 * n, std::move(kk), tol);
  return LinearRelation(n, intersect(t.graph(), constraint));
}

LinearRelation shift(const LinearRelation& t, Complex zeta) {
  const Index n = t.space_dim();
  Matrix stacked(2 * n, t.dim());
  stacked.topRows(n) = t.top();
  stacked.bottomRows(n) = t.bottom() - zeta * t.top();
  return LinearRelation::from_graph_columns(n, stacked, t.tol());
}

Subspace scalar_pencil(Index space_dim, Complex zeta, double tol) {
  const Index n = space_dim;
  const double scale = 1.0 / std::sqrt(1.0 + std::norm(zeta));
  Matrix basis(2 * n, n);
  basis.topRows(n) = scale * Matrix::Identity(n, n);
  basis.bottomRows(n) = (zeta * scale) * Matrix::Identity(n, n);
  return Subspace(2 * n, std::move(basis), tol);
}

Subspace eigenspace(const LinearRelation& t, Complex lambda) {
  const Index n = t.space_dim();
  Subspace pencil = scalar_pencil(n, lambda, t.tol());
  Subspace pairs = intersect(t.graph(), pencil);
  if (pairs.dim() == 0) return Subspace::zero(n, t.tol());
  return span(Matrix(pairs.basis().topRows(n)), t.tol());
}

SubspaceOrder compare(const LinearRelation& a, const LinearRelation& b) {
  if (a.space_dim() != b.space_dim())
    throw DimensionMismatch("compare: space dimensions differ");
  return compare(a.graph(), b.graph());
}

bool equal(const LinearRelation& a, const LinearRelation& b) {
  return compare(a, b) == SubspaceOrder::Equal;
}

}  // namespace relcalc
