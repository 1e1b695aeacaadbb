#include "relcalc/subspace.hpp"

#include <algorithm>
#include <cmath>

#include "relcalc/errors.hpp"
#include "internal.hpp"

namespace relcalc {

namespace internal {

namespace {
constexpr Index kBdcCutoff = 32;
}

SvdRank svd_rank(const Matrix& m, double tol, bool want_u, bool want_v) {
  SvdRank out;
  if (m.cols() == 0 || m.rows() == 0) {
    out.u = Matrix(m.rows(), 0);
    out.v = Matrix(m.cols(), m.cols());
    out.v.setIdentity();
    out.sigma = Eigen::VectorXd(0);
    out.rank = 0;
    return out;
  }
  unsigned int options = 0;
  if (want_u) options |= Eigen::ComputeThinU;
  if (want_v) options |= Eigen::ComputeFullV;
  if (std::min(m.rows(), m.cols()) >= kBdcCutoff) {
    Eigen::BDCSVD<Matrix> svd(m, options);
    out.sigma = svd.singularValues();
    if (want_u) out.u = svd.matrixU();
    if (want_v) out.v = svd.matrixV();
  } else {
    Eigen::JacobiSVD<Matrix> svd(m, options);
    out.sigma = svd.singularValues();
    if (want_u) out.u = svd.matrixU();
    if (want_v) out.v = svd.matrixV();
  }
  const double thresh = rank_threshold(out.sigma, tol);
  out.rank = (out.sigma.array() > thresh).count();
  return out;
}

Index matrix_rank(const Matrix& m, double tol) {
  return svd_rank(m, tol, false, false).rank;
}

Matrix orthonormal_image(const Matrix& m, double tol) {
  SvdRank s = svd_rank(m, tol, true, false);
  return s.u.leftCols(s.rank);
}

Matrix nullspace(const Matrix& m, double tol) {
  SvdRank s = svd_rank(m, tol, false, true);
  return s.v.rightCols(m.cols() - s.rank);
}

Matrix orthonormal_completion(const Matrix& basis, Index ambient_dim) {
  const Index d = basis.cols();
  if (d == 0) return Matrix::Identity(ambient_dim, ambient_dim);
  if (d >= ambient_dim) return Matrix(ambient_dim, 0);
  Eigen::HouseholderQR<Matrix> qr(basis);
  Matrix q = qr.householderQ();
  return q.rightCols(ambient_dim - d);
}

}  // namespace internal

using internal::all_finite;

Subspace::Subspace(Index ambient_dim, Matrix basis, double tol)
    : ambient_dim_(ambient_dim), basis_(std::move(basis)), tol_(tol) {
  if (ambient_dim_ < 1) throw InvalidArgument("subspace: ambient dimension must be positive");
  if (tol_ <= 0) throw InvalidArgument("subspace: tolerance must be positive");
  if (basis_.rows() != ambient_dim_)
    throw DimensionMismatch("subspace: basis rows != ambient dimension");
  if (basis_.cols() > ambient_dim_)
    throw InvalidArgument("subspace: more basis columns than ambient dimension");
  if (!all_finite(basis_)) throw InvalidArgument("subspace: non-finite basis entries");
  if (basis_.cols() > 0) {
    Matrix gram = basis_.adjoint() * basis_;
    gram -= Matrix::Identity(basis_.cols(), basis_.cols());
    if (gram.cwiseAbs().maxCoeff() > 10.0 * tol_)
      throw InvalidArgument("subspace: basis columns not orthonormal");
  }
}

Subspace Subspace::zero(Index ambient_dim, double tol) {
  return Subspace(ambient_dim, Matrix(ambient_dim, 0), tol);
}

Subspace Subspace::full(Index ambient_dim, double tol) {
  return Subspace(ambient_dim, Matrix::Identity(ambient_dim, ambient_dim), tol);
}

Subspace span(const Matrix& columns, double tol) {
  if (columns.rows() < 1) throw InvalidArgument("span: empty ambient dimension");
  if (!all_finite(columns)) throw InvalidArgument("span: non-finite entries");
  if (columns.cols() == 0) return Subspace::zero(columns.rows(), tol);
  return Subspace(columns.rows(), internal::orthonormal_image(columns, tol), tol);
}

Subspace span(Index ambient_dim, const std::vector<Vector>& vectors, double tol) {
  Matrix m(ambient_dim, static_cast<Index>(vectors.size()));
  for (Index k = 0; k < m.cols(); ++k) {
    if (vectors[static_cast<size_t>(k)].size() != ambient_dim)
      throw DimensionMismatch("span: vector length != ambient dimension");
    m.col(k) = vectors[static_cast<size_t>(k)];
  }
  return span(m, tol);
}

namespace {

void require_same_ambient(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw DimensionMismatch("subspace operation: ambient dimensions differ");
}

}  // namespace

Subspace sum(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b);
  const double tol = std::max(a.tol(), b.tol());
  if (a.dim() == 0) return Subspace(b.ambient_dim(), b.basis(), tol);
  if (b.dim() == 0) return Subspace(a.ambient_dim(), a.basis(), tol);
  Matrix joint(a.ambient_dim(), a.dim() + b.dim());
  joint << a.basis(), b.basis();
  return span(joint, tol);
}

Subspace complement(const Subspace& a) {
  return Subspace(a.ambient_dim(),
                  internal::orthonormal_completion(a.basis(), a.ambient_dim()),
                  a.tol());
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b);
  return complement(sum(complement(a), complement(b)));
}

Subspace ominus(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b);
  return intersect(a, complement(b));
}

bool member(const Subspace& s, const Vector& v) {
  if (v.size() != s.ambient_dim())
    throw DimensionMismatch("member: vector length != ambient dimension");
  const double residual = (v - project(s, v)).norm();
  return residual <= s.tol() * std::max(1.0, v.norm());
}

SubspaceOrder compare(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b);
  const auto subset = [](const Subspace& x, const Subspace& y, double tol) {
    if (x.dim() == 0) return true;
    if (x.dim() > y.dim()) return false;  // dimension obstruction
    const Matrix residual =
        x.basis() - y.basis() * (y.basis().adjoint() * x.basis());
    return residual.colwise().norm().maxCoeff() <= tol;
  };
  const double tol = std::max(a.tol(), b.tol());
  const bool ab = subset(a, b, tol);
  const bool ba = subset(b, a, tol);
  if (ab && ba) return SubspaceOrder::Equal;
  if (ab) return SubspaceOrder::ASubsetB;
  if (ba) return SubspaceOrder::BSubsetA;
  return SubspaceOrder::Incomparable;
}

bool equal(const Subspace& a, const Subspace& b) {
  return compare(a, b) == SubspaceOrder::Equal;
}

Vector project(const Subspace& s, const Vector& v) {
  if (v.size() != s.ambient_dim())
    throw DimensionMismatch("project: vector length != ambient dimension");
  return s.basis() * (s.basis().adjoint() * v);
}

Matrix project(const Subspace& s, const Matrix& columns) {
  if (columns.rows() != s.ambient_dim())
    throw DimensionMismatch("project: row count != ambient dimension");
  return s.basis() * (s.basis().adjoint() * columns);
}

double largest_principal_angle(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b);
  if (a.dim() != b.dim()) return M_PI / 2.0;
  if (a.dim() == 0) return 0.0;
  Matrix overlap = a.basis().adjoint() * b.basis();
  Eigen::JacobiSVD<Matrix> svd(overlap);
  const double smallest = svd.singularValues().minCoeff();
  return std::acos(std::clamp(smallest, -1.0, 1.0));
}

}  // namespace relcalc
