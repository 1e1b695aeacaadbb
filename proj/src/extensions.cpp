#include "relcalc/extensions.hpp"

#include <algorithm>
#include <cmath>

#include "relcalc/classify.hpp"
#include "relcalc/errors.hpp"
#include "relcalc/spectral.hpp"
#include "internal.hpp"

namespace relcalc {

namespace {

void require_hermitian(const Matrix& j, double tol, const char* who) {
  if (j.rows() != j.cols() || j.rows() < 1)
    throw InvalidArgument(std::string(who) + ": matrix must be square");
  if (!internal::all_finite(j))
    throw InvalidArgument(std::string(who) + ": non-finite entries");
  const double scale = std::max(1.0, j.cwiseAbs().maxCoeff());
  if ((j - j.adjoint()).cwiseAbs().maxCoeff() > tol * scale)
    throw InvalidArgument(std::string(who) + ": matrix is not Hermitian");
}

bool is_subset(const LinearRelation& s, const LinearRelation& t) {
  const auto order = compare(s, t);
  return order == SubspaceOrder::ASubsetB || order == SubspaceOrder::Equal;
}

}  // namespace

Matrix jacobi(Index n, const std::vector<double>& diagonal,
              const std::vector<double>& offdiagonal) {
  if (n < 1) throw InvalidArgument("jacobi: size must be positive");
  if (static_cast<Index>(diagonal.size()) != n)
    throw InvalidArgument("jacobi: diagonal length must equal n");
  if (static_cast<Index>(offdiagonal.size()) != n - 1)
    throw InvalidArgument("jacobi: off-diagonal length must equal n-1");
  Matrix m = Matrix::Zero(n, n);
  for (Index k = 0; k < n; ++k) m(k, k) = diagonal[static_cast<size_t>(k)];
  for (Index k = 0; k + 1 < n; ++k) {
    const double b = offdiagonal[static_cast<size_t>(k)];
    if (!(b > 0.0)) throw InvalidArgument("jacobi: off-diagonal entries must be positive");
    m(k, k + 1) = b;
    m(k + 1, k) = b;
  }
  return m;
}

Matrix jacobi_free(Index n) {
  return jacobi(n, std::vector<double>(static_cast<size_t>(n), 0.0),
                std::vector<double>(static_cast<size_t>(n - 1), 1.0));
}

LinearRelation restrict_operator(const Matrix& j, const std::vector<Vector>& deltas,
                                 double tol) {
  require_hermitian(j, tol, "restrict_operator");
  const Index n = j.rows();
  if (deltas.empty()) throw InvalidArgument("restrict_operator: no restriction vectors");
  Matrix d(n, static_cast<Index>(deltas.size()));
  for (Index k = 0; k < d.cols(); ++k) {
    const Vector& v = deltas[static_cast<size_t>(k)];
    if (v.size() != n) throw DimensionMismatch("restrict_operator: delta length != n");
    if (v.norm() <= tol) throw InvalidArgument("restrict_operator: zero delta");
    d.col(k) = v;
  }
  if (internal::matrix_rank(d, tol) != d.cols())
    throw InvalidArgument("restrict_operator: deltas are linearly dependent");

  Subspace dom = complement(span(d, tol));
  Matrix stacked(2 * n, dom.dim());
  stacked.topRows(n) = dom.basis();
  stacked.bottomRows(n) = j * dom.basis();
  LinearRelation restriction = LinearRelation::from_graph_columns(n, stacked, tol);

  const Index defect = d.cols();
  if (deficiency_index(restriction, Complex(0.0, 1.0)) != defect ||
      deficiency_index(restriction, Complex(0.0, -1.0)) != defect)
    throw Error("restrict_operator: deficiency indices do not match the defect count");
  return restriction;
}

bool is_generating(const Matrix& j, const Vector& delta, double tol) {
  require_hermitian(j, tol, "is_generating");
  const Index n = j.rows();
  if (delta.size() != n) throw DimensionMismatch("is_generating: delta length != n");
  if (delta.norm() <= tol) throw InvalidArgument("is_generating: zero delta");

  // Krylov dimension via Lanczos with full reorthogonalization.
  const double breakdown = std::max(tol * std::max(1.0, j.cwiseAbs().maxCoeff()), kAbsFloor);
  Matrix basis(n, n);
  basis.col(0) = delta.normalized();
  Index dim = 1;
  while (dim < n) {
    Vector w = j * basis.col(dim - 1);
    for (int pass = 0; pass < 2; ++pass)
      w -= basis.leftCols(dim) * (basis.leftCols(dim).adjoint() * w);
    const double norm = w.norm();
    if (norm <= breakdown) break;
    basis.col(dim) = w / norm;
    ++dim;
  }
  return dim == n;
}

ExtensionFamily::ExtensionFamily(Matrix j, Vector delta, double tol)
    : j_(std::move(j)),
      delta_(std::move(delta)),
      tol_(tol),
      restriction_(restrict_operator(j_, {delta_}, tol)) {}

LinearRelation ExtensionFamily::extension(Tau tau) const {
  const Index n = j_.rows();
  if (!tau.is_infinite()) {
    if (!std::isfinite(tau.value()))
      throw InvalidArgument("extension: non-finite tau");
    Matrix m = j_ + tau.value() * (delta_ * delta_.adjoint());
    LinearRelation ext = LinearRelation::from_operator(m, tol_);
    if (!is_subset(restriction_, ext))
      throw Error("extension: J(tau) does not extend the restriction");
    return ext;
  }
  Matrix vertical(2 * n, 1);
  vertical.topRows(n).setZero();
  vertical.bottomRows(n) = delta_ / delta_.norm();
  LinearRelation ext(n, sum(restriction_.graph(), Subspace(2 * n, vertical, tol_)));
  if (!is_subset(restriction_, ext))
    throw Error("extension: J(inf) does not extend the restriction");
  if (!is_selfadjoint(ext)) throw Error("extension: J(inf) is not selfadjoint");
  LinearRelation inf_part = decompose(ext).multivalued_part;
  if (inf_part.dim() != 1 ||
      !member(Subspace(n, inf_part.bottom(), tol_), delta_ / delta_.norm()))
    throw Error("extension: mul J(inf) != span{delta}");
  return ext;
}

LinearRelation extension_with_eigenvalue(const LinearRelation& s, Complex lambda) {
  if (!is_symmetric(s))
    throw PreconditionFailed("extension_with_eigenvalue: S is not symmetric");
  if (lambda.imag() < 0.0)
    throw InvalidArgument("extension_with_eigenvalue: lambda in the lower half-plane");
  if (eigenvalue_multiplicity(s, lambda) > 0)
    throw LambdaNotQuasiRegular("extension_with_eigenvalue: lambda is an eigenvalue of S");

  const Index n = s.space_dim();
  LinearRelation s_star = adjoint(s);
  Subspace defect = intersect(s_star.graph(), scalar_pencil(n, lambda, s.tol()));
  LinearRelation ext(n, sum(s.graph(), defect));

  if (!is_maximal_dissipative(ext))
    throw Error("extension_with_eigenvalue: constructed extension is not maximal dissipative");
  const bool real = lambda.imag() == 0.0;
  if (is_selfadjoint(ext) != real)
    throw Error("extension_with_eigenvalue: selfadjointness does not match Im(lambda)");
  return ext;
}

namespace {

const Matrix& checked_orthonormal_pair(const Matrix& j, const Vector& delta1,
                                       const Vector& delta2, double tol) {
  if (std::abs(delta1.norm() - 1.0) > tol || std::abs(delta2.norm() - 1.0) > tol ||
      std::abs(delta1.dot(delta2)) > tol)
    throw InvalidArgument("two_defect_restriction: deltas must be orthonormal");
  return j;
}

}  // namespace

TwoDefectRestriction::TwoDefectRestriction(const Matrix& j, const Vector& delta1,
                                           const Vector& delta2, double tol)
    : restriction(restrict_operator(checked_orthonormal_pair(j, delta1, delta2, tol),
                                    {delta1, delta2}, tol)),
      extension1(ExtensionFamily(j, delta1, tol).extension(Tau::infinite())),
      extension2(ExtensionFamily(j, delta2, tol).extension(Tau::infinite())) {
  if (!is_subset(restriction, extension1) || !is_subset(restriction, extension2))
    throw Error("two_defect_restriction: extensions do not contain S");
  Subspace mul1 = parts(extension1).mul;
  Subspace mul2 = parts(extension2).mul;
  if (compare(mul1, mul2) != SubspaceOrder::Incomparable)
    throw Error("two_defect_restriction: extensions share a multivalued part");
}

std::vector<SweepRow> family_sweep(const ExtensionFamily& fam,
                                   const std::vector<Tau>& taus) {
  std::vector<Tau> ordered = taus;
  std::stable_sort(ordered.begin(), ordered.end(), [](Tau x, Tau y) {
    if (x.is_infinite() != y.is_infinite()) return y.is_infinite();
    if (x.is_infinite()) return false;
    return x.value() < y.value();
  });
  std::vector<SweepRow> rows;
  for (Tau tau : ordered) {
    SpectralMeasure sm = spectral_measure(fam.extension(tau));
    Index k = 1;
    for (const auto& pair : sm.eigenpairs)
      for (Index copy = 0; copy < pair.multiplicity; ++copy)
        rows.push_back(SweepRow{tau, k++, pair.eigenvalue});
  }
  return rows;
}

}  // namespace relcalc
