#pragma once

// Independent oracles and randomized generators used by the test suites.
// Everything here deliberately avoids the library's own code paths: the
// adjoint comes from its defining equations, pencil roots from polynomial
// interpolation plus Durand-Kerner iteration, and spectra of concrete
// operators from dense eigensolvers on plain matrices.

#include <algorithm>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "relcalc/relation.hpp"
#include "relcalc/types.hpp"

namespace oracle {

using relcalc::Complex;
using relcalc::Index;
using relcalc::LinearRelation;
using relcalc::Matrix;
using relcalc::Vector;

using Rng = std::mt19937_64;

// ---------------------------------------------------------------------------
// Definition-based adjoint: (h,k) with <k,f> = <h,g> for every graph pair,
// solved as the SVD nullspace of one constraint row per basis pair.
inline LinearRelation adjoint_by_definition(const LinearRelation& t) {
  const Index n = t.space_dim();
  const Index d = t.dim();
  if (d == 0)
    return LinearRelation(n, relcalc::Subspace::full(2 * n, t.tol()));
  // <k,f> = <h,g>  <=>  f^H k - g^H h = 0  <=>  [-g^H, f^H] (h;k) = 0.
  Matrix constraints(d, 2 * n);
  constraints.leftCols(n) = -t.bottom().adjoint();
  constraints.rightCols(n) = t.top().adjoint();
  Eigen::JacobiSVD<Matrix> svd(constraints, Eigen::ComputeFullV);
  Index rank = 0;
  const auto& sigma = svd.singularValues();
  const double thresh = sigma.size() > 0 ? 1e-10 * std::max(sigma(0), 1.0) : 0.0;
  for (Index k = 0; k < sigma.size(); ++k)
    if (sigma(k) > thresh) ++rank;
  Matrix basis = svd.matrixV().rightCols(2 * n - rank);
  return LinearRelation(n, relcalc::Subspace(2 * n, std::move(basis), t.tol()));
}

// ---------------------------------------------------------------------------
// Characteristic polynomial of the pencil B2 - lambda B1 by interpolation of
// the determinant on a circle, coefficients low to high.
inline std::vector<Complex> pencil_coefficients(const Matrix& b1, const Matrix& b2) {
  const Index n = b1.rows();
  const Index count = n + 1;
  Matrix vander(count, count);
  Eigen::VectorXcd values(count);
  for (Index k = 0; k < count; ++k) {
    const double angle = 2.0 * M_PI * static_cast<double>(k) / static_cast<double>(count);
    const Complex mu = 1.9 * Complex(std::cos(angle), std::sin(angle));
    values(k) = (b2 - mu * b1).determinant();
    Complex power = 1.0;
    for (Index j = 0; j < count; ++j) {
      vander(k, j) = power;
      power *= mu;
    }
  }
  Eigen::VectorXcd coeffs = vander.colPivHouseholderQr().solve(values);
  return {coeffs.data(), coeffs.data() + coeffs.size()};
}

// Durand-Kerner (Weierstrass) iteration for all roots of a polynomial with
// coefficients low to high; leading coefficient must be the last entry.
inline std::vector<Complex> durand_kerner(std::vector<Complex> coeffs) {
  while (coeffs.size() > 1 && std::abs(coeffs.back()) == 0.0) coeffs.pop_back();
  const Index degree = static_cast<Index>(coeffs.size()) - 1;
  if (degree < 1) return {};
  const Complex lead = coeffs.back();
  for (auto& c : coeffs) c /= lead;
  const auto eval = [&](Complex z) {
    Complex acc = 0.0;
    for (Index k = degree; k >= 0; --k) acc = acc * z + coeffs[static_cast<size_t>(k)];
    return acc;
  };
  double radius = 0.0;
  for (Index k = 0; k < degree; ++k)
    radius = std::max(radius, std::abs(coeffs[static_cast<size_t>(k)]));
  radius = 1.0 + radius;
  std::vector<Complex> roots(static_cast<size_t>(degree));
  for (Index k = 0; k < degree; ++k) {
    const double angle = 2.0 * M_PI * static_cast<double>(k) / static_cast<double>(degree);
    roots[static_cast<size_t>(k)] =
        radius * 0.7 * Complex(std::cos(angle + 0.4), std::sin(angle + 0.4));
  }
  for (int sweep = 0; sweep < 500; ++sweep) {
    double movement = 0.0;
    for (Index k = 0; k < degree; ++k) {
      Complex denom = 1.0;
      for (Index j = 0; j < degree; ++j)
        if (j != k)
          denom *= roots[static_cast<size_t>(k)] - roots[static_cast<size_t>(j)];
      const Complex step = eval(roots[static_cast<size_t>(k)]) / denom;
      roots[static_cast<size_t>(k)] -= step;
      movement = std::max(movement, std::abs(step));
    }
    if (movement < 1e-14) break;
  }
  return roots;
}

// Multiset match of two complex eigenvalue lists within a tolerance.
inline bool eigenvalues_match(std::vector<Complex> a, std::vector<Complex> b, double tol) {
  if (a.size() != b.size()) return false;
  for (Complex x : a) {
    double best = 1e300;
    size_t best_k = 0;
    for (size_t k = 0; k < b.size(); ++k) {
      const double dist = std::abs(x - b[k]);
      if (dist < best) {
        best = dist;
        best_k = k;
      }
    }
    if (b.empty() || best > tol * std::max(1.0, std::abs(x))) return false;
    b.erase(b.begin() + static_cast<std::ptrdiff_t>(best_k));
  }
  return true;
}

// ---------------------------------------------------------------------------
// Random generators (deterministic under a fixed seed).

inline double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline Matrix random_matrix(Rng& rng, Index rows, Index cols) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix m(rows, cols);
  for (Index r = 0; r < rows; ++r)
    for (Index c = 0; c < cols; ++c) m(r, c) = Complex(gauss(rng), gauss(rng));
  return m;
}

inline Vector random_unit_vector(Rng& rng, Index n) {
  Vector v = random_matrix(rng, n, 1).col(0);
  return v / v.norm();
}

inline Matrix random_unitary(Rng& rng, Index n) {
  Eigen::HouseholderQR<Matrix> qr(random_matrix(rng, n, n));
  return qr.householderQ() * Matrix::Identity(n, n);
}

inline Matrix random_hermitian(Rng& rng, Index n) {
  Matrix m = random_matrix(rng, n, n);
  return 0.5 * (m + m.adjoint()).eval();
}

// Hermitian matrix with prescribed (possibly repeated) eigenvalues.
inline Matrix hermitian_with_eigenvalues(Rng& rng, const std::vector<double>& eigenvalues) {
  const Index n = static_cast<Index>(eigenvalues.size());
  Matrix u = random_unitary(rng, n);
  Eigen::VectorXd d(n);
  for (Index k = 0; k < n; ++k) d(k) = eigenvalues[static_cast<size_t>(k)];
  return u * d.asDiagonal() * u.adjoint();
}

inline Matrix random_psd(Rng& rng, Index n, Index rank) {
  Matrix w = Matrix::Zero(n, n);
  for (Index k = 0; k < rank; ++k) {
    Vector v = random_matrix(rng, n, 1).col(0);
    w += v * v.adjoint();
  }
  return w;
}

/// Random relation: span of dim random columns of C^{2n}.
inline LinearRelation random_relation(Rng& rng, Index n, Index dim,
                                      double tol = relcalc::kDefaultTol) {
  return LinearRelation::from_graph_columns(n, random_matrix(rng, 2 * n, dim), tol);
}

/// Random maximal dissipative operator relation: graph(H + i P), P psd.
inline LinearRelation random_maximal_dissipative(Rng& rng, Index n, Index imag_rank,
                                                 double tol = relcalc::kDefaultTol) {
  Matrix m = random_hermitian(rng, n) + Complex(0.0, 1.0) * random_psd(rng, n, imag_rank);
  return LinearRelation::from_operator(m, tol);
}

/// Random selfadjoint relation with a multivalued part: pairs
/// (f, Hf + m) with f in a random subspace K, H Hermitian on K, m ⊥ K.
inline LinearRelation random_selfadjoint_relation(Rng& rng, Index n, Index carrier_dim,
                                                  double tol = relcalc::kDefaultTol) {
  const Index r = carrier_dim;
  Eigen::HouseholderQR<Matrix> qr(random_matrix(rng, n, r));
  Matrix full = qr.householderQ() * Matrix::Identity(n, n);
  Matrix kb = full.leftCols(r);
  Matrix h = random_hermitian(rng, r);
  Matrix stacked(2 * n, n);
  stacked.setZero();
  stacked.topLeftCorner(n, r) = kb;
  stacked.bottomLeftCorner(n, r) = kb * h;
  stacked.bottomRightCorner(n, n - r) = full.rightCols(n - r);
  return LinearRelation::from_graph_columns(n, stacked, tol);
}

/// Random maximal dissipative relation: pairs (f, Mf + m), f in K,
/// M = Hermitian + i*psd on K, m ⊥ K.
inline LinearRelation random_dissipative_relation(Rng& rng, Index n, Index carrier_dim,
                                                  Index imag_rank,
                                                  double tol = relcalc::kDefaultTol) {
  const Index r = carrier_dim;
  Eigen::HouseholderQR<Matrix> qr(random_matrix(rng, n, r));
  Matrix full = qr.householderQ() * Matrix::Identity(n, n);
  Matrix kb = full.leftCols(r);
  Matrix m = random_hermitian(rng, r) + Complex(0.0, 1.0) * random_psd(rng, r, imag_rank);
  Matrix stacked(2 * n, n);
  stacked.setZero();
  stacked.topLeftCorner(n, r) = kb;
  stacked.bottomLeftCorner(n, r) = kb * m;
  stacked.bottomRightCorner(n, n - r) = full.rightCols(n - r);
  return LinearRelation::from_graph_columns(n, stacked, tol);
}

/// Sorted eigenvalues of a Hermitian matrix, dense solver only.
inline std::vector<double> hermitian_eigenvalues(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(m, Eigen::EigenvaluesOnly);
  return {es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size()};
}

/// Orthonormal basis of delta^⊥ straight from a Householder QR.
inline Matrix householder_complement(const Vector& delta) {
  const Index n = delta.size();
  Matrix col = delta;
  Eigen::HouseholderQR<Matrix> qr(col);
  Matrix q = qr.householderQ();
  return q.rightCols(n - 1);
}

/// Dense-oracle spectrum of J(inf): eigenvalues of the compression of j
/// onto delta^⊥ (plus the eigenvalue at infinity, not listed).
inline std::vector<double> jinf_spectrum_oracle(const Matrix& j, const Vector& delta) {
  const Matrix k = householder_complement(delta / delta.norm());
  return hermitian_eigenvalues(k.adjoint() * j * k);
}

}  // namespace oracle
