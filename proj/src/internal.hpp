#pragma once

#include <Eigen/Dense>

#include "relcalc/types.hpp"

namespace relcalc::internal {

inline bool all_finite(const Matrix& m) { return m.allFinite(); }

inline double rank_threshold(const Eigen::VectorXd& sigma, double tol) {
  const double top = sigma.size() > 0 ? sigma(0) : 0.0;
  return std::max(tol * top, kAbsFloor);
}

struct SvdRank {
  Matrix u;               // thin U (set when want_u)
  Matrix v;               // full V (set when want_v)
  Eigen::VectorXd sigma;  // descending
  Index rank = 0;
};

/// SVD with the shared rank rule. BDCSVD above a size cutoff, JacobiSVD
/// below it (Jacobi is more accurate on tiny problems).
SvdRank svd_rank(const Matrix& m, double tol, bool want_u, bool want_v);

Index matrix_rank(const Matrix& m, double tol);

/// Orthonormal basis of the column space (thin U truncated at the rank).
Matrix orthonormal_image(const Matrix& m, double tol);

/// Orthonormal basis of ker(m): trailing right singular vectors.
Matrix nullspace(const Matrix& m, double tol);

/// Orthonormal completion of an m x d matrix with orthonormal columns:
/// the trailing m-d columns of the full Q of its QR factorization.
Matrix orthonormal_completion(const Matrix& basis, Index ambient_dim);

}  // namespace relcalc::internal
