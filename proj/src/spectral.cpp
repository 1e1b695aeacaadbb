#include "relcalc/spectral.hpp"

#include <algorithm>
#include <cmath>

#include "relcalc/classify.hpp"
#include "relcalc/errors.hpp"
#include "internal.hpp"

namespace relcalc {

Interval::Interval(double alpha_, double beta_) : alpha(alpha_), beta(beta_) {
  if (!(alpha < beta)) throw InvalidArgument("interval: alpha must be < beta");
  if (!std::isfinite(alpha) || !std::isfinite(beta))
    throw InvalidArgument("interval: non-finite endpoint");
}

namespace {

constexpr double kClusterTol = 1e-6;   // pencil eigenvalue clustering
constexpr double kRealBand = 1e-8;     // |Im| band for "real" eigenvalues
constexpr double kDegenerateDet = 1e-11;

struct Cluster {
  Complex value;
  Index size;
};

std::vector<Cluster> cluster_points(std::vector<Complex> points) {
  std::sort(points.begin(), points.end(), [](Complex a, Complex b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  std::vector<Cluster> clusters;
  for (Complex p : points) {
    if (!clusters.empty() &&
        std::abs(p - clusters.back().value) <=
            kClusterTol * std::max(1.0, std::abs(p))) {
      ++clusters.back().size;
    } else {
      clusters.push_back({p, 1});
    }
  }
  return clusters;
}

SpectrumReport selfadjoint_spectrum(const LinearRelation& t) {
  SpectralMeasure sm = spectral_measure(t);
  SpectrumReport report;
  report.degenerate = false;
  report.spectrum_real = true;
  report.has_infinite_eigenvalue = sm.carrier.dim() < t.space_dim();
  report.infinite_algebraic = t.space_dim() - sm.carrier.dim();
  for (const auto& pair : sm.eigenpairs) {
    // Selfadjoint relations are semisimple: algebraic = geometric.
    report.eigenvalues.push_back(
        EigenvalueEntry{Complex(pair.eigenvalue, 0.0), pair.multiplicity,
                        pair.multiplicity});
  }
  return report;
}

}  // namespace

SpectrumReport spectrum(const LinearRelation& t) {
  const Index n = t.space_dim();
  if (is_selfadjoint(t)) return selfadjoint_spectrum(t);

  SpectrumReport report;
  report.has_infinite_eigenvalue =
      internal::nullspace(t.top(), t.tol()).cols() > 0;

  if (t.dim() != n) {
    // Non-square pencil: ran(T - lambda I) is never all of C^n (dim < n) or
    // every lambda is an eigenvalue (dim > n); either way rho(T) is empty.
    report.degenerate = true;
    return report;
  }

  const Matrix b1 = t.top();
  const Matrix b2 = t.bottom();

  // det(B2 - lambda B1) at n+1 points; a degree <= n polynomial vanishing at
  // all of them is identically zero.
  std::vector<Complex> samples;
  double best_det = -1.0;
  Complex best_sample = 0.0;
  for (Index k = 0; k <= n; ++k) {
    const double angle = 2.0 * M_PI * static_cast<double>(k) / static_cast<double>(n + 1);
    const Complex lambda = Complex(0.17, 0.11) + 2.3 * Complex(std::cos(angle), std::sin(angle));
    const double det = std::abs((b2 - lambda * b1).determinant());
    samples.push_back(lambda);
    if (det > best_det) {
      best_det = det;
      best_sample = lambda;
    }
  }
  if (best_det <= kDegenerateDet) {
    report.degenerate = true;
    return report;
  }

  // Moebius transform: eigenvalues of (B2 - s B1)^{-1} B1 are theta with
  // lambda = s + 1/theta; theta = 0 marks the eigenvalue at infinity.
  const Matrix w = (b2 - best_sample * b1).colPivHouseholderQr().solve(b1);
  Eigen::ComplexEigenSolver<Matrix> es(w, false);
  const auto theta = es.eigenvalues();
  const double theta_floor = 1e-10 * std::max(1.0, theta.cwiseAbs().maxCoeff());

  std::vector<Complex> finite;
  for (Index k = 0; k < theta.size(); ++k) {
    if (std::abs(theta(k)) <= theta_floor) {
      ++report.infinite_algebraic;
    } else {
      finite.push_back(best_sample + 1.0 / theta(k));
    }
  }

  report.spectrum_real = true;
  for (const Cluster& c : cluster_points(std::move(finite))) {
    const double scale = std::max(1.0, std::abs(c.value));
    const bool real = std::abs(c.value.imag()) <= kRealBand * scale;
    if (!real) report.spectrum_real = false;
    const Complex value = real ? Complex(c.value.real(), 0.0) : c.value;
    report.eigenvalues.push_back(
        EigenvalueEntry{value, c.size, eigenvalue_multiplicity(t, value)});
  }
  return report;
}

Matrix resolvent(const LinearRelation& t, Complex zeta) {
  const Index n = t.space_dim();
  const bool injective = eigenvalue_multiplicity(t, zeta) == 0;
  const bool surjective =
      internal::matrix_rank(t.bottom() - zeta * t.top(), t.tol()) == n;
  if (!injective || !surjective) throw NotInRegularSet(zeta, injective, surjective);

  LinearRelation inv = inverse(shift(t, zeta));
  const Matrix c1 = inv.top();
  const Matrix c2 = inv.bottom();
  // dom of the inverse is all of C^n here, so c1 is square and invertible.
  Matrix r_t = c1.transpose().colPivHouseholderQr().solve(c2.transpose());
  return r_t.transpose();
}

SpectralMeasure spectral_measure(const LinearRelation& a) {
  if (!is_selfadjoint(a)) throw NotSelfadjoint("spectral_measure: relation is not selfadjoint");
  const Index n = a.space_dim();
  const double tol = a.tol();

  Decomposition dec = decompose(a);
  const Index q = dec.multivalued_part.dim();
  Subspace mul = q == 0 ? Subspace::zero(n, tol)
                        : Subspace(n, dec.multivalued_part.bottom(), tol);
  Subspace carrier = complement(mul);
  const Index r = carrier.dim();

  SpectralMeasure out{std::move(carrier), {}};
  if (r == 0) return out;

  const Matrix c1 = out.carrier.basis().adjoint() * dec.operator_part.top();
  const Matrix c2 = out.carrier.basis().adjoint() * dec.operator_part.bottom();
  if (c1.rows() != c1.cols())
    throw Error("spectral_measure: operator part is not defined on the whole carrier");
  Eigen::ColPivHouseholderQR<Matrix> lu(c1);
  if (lu.rank() < c1.cols())
    throw Error("spectral_measure: operator part domain is rank deficient");
  Matrix m_t = c1.transpose().colPivHouseholderQr().solve(c2.transpose());
  Matrix m = m_t.transpose();
  m = 0.5 * (m + m.adjoint()).eval();

  Eigen::SelfAdjointEigenSolver<Matrix> es(m);
  const Eigen::VectorXd lambda = es.eigenvalues();
  const Matrix vectors = out.carrier.basis() * es.eigenvectors();  // ambient coords

  const double band = 1e-9 * std::max(1.0, lambda.cwiseAbs().maxCoeff());
  Index start = 0;
  while (start < r) {
    Index stop = start + 1;
    while (stop < r && lambda(stop) - lambda(stop - 1) <= band) ++stop;
    const Matrix block = vectors.middleCols(start, stop - start);
    double value = lambda.segment(start, stop - start).mean();
    if (value == 0.0) value = 0.0;  // normalize -0
    out.eigenpairs.push_back(
        SpectralProjection{value, stop - start, block * block.adjoint()});
    start = stop;
  }
  return out;
}

MuCount mu_count(const SpectralMeasure& measure, const Interval& delta, double tol) {
  const double band = tol * std::max({1.0, std::abs(delta.alpha), std::abs(delta.beta)});
  MuCount out;
  for (const auto& pair : measure.eigenpairs) {
    const double lambda = pair.eigenvalue;
    if (std::abs(lambda - delta.alpha) <= band || std::abs(lambda - delta.beta) <= band) {
      out.near_endpoint.push_back(lambda);
    } else if (lambda > delta.alpha && lambda < delta.beta) {
      out.count += pair.multiplicity;
    }
  }
  return out;
}

MuCount mu_count(const LinearRelation& a, const Interval& delta) {
  return mu_count(spectral_measure(a), delta, a.tol());
}

bool is_lacuna(const LinearRelation& s, const Interval& delta) {
  if (!is_symmetric(s)) throw NotSymmetric("is_lacuna: relation is not symmetric");
  if (s.dim() == 0) return true;
  const double gamma = delta.center();
  const double xi = delta.radius();
  const Matrix g = s.bottom() - gamma * s.top();
  const Matrix b1 = s.top();
  const Matrix m = g.adjoint() * g - (xi * xi) * (b1.adjoint() * b1);
  Eigen::SelfAdjointEigenSolver<Matrix> es(m, Eigen::EigenvaluesOnly);
  const double largest = es.eigenvalues().cwiseAbs().maxCoeff();
  return es.eigenvalues().minCoeff() >= -s.tol() * std::max(1.0, largest);
}

EssentialSpectrum essential_spectrum(const LinearRelation& a) {
  if (!is_selfadjoint(a))
    throw NotSelfadjoint("essential_spectrum: relation is not selfadjoint");
  return EssentialSpectrum{
      {},
      "empty: in finite dimension the continuous spectrum and the "
      "infinite-multiplicity point spectrum are both empty"};
}

}  // namespace relcalc
