#pragma once

#include <string>
#include <vector>

#include "relcalc/relation.hpp"
#include "relcalc/types.hpp"

namespace relcalc {

/// Open interval (alpha, beta).
struct Interval {
  Interval(double alpha_, double beta_);
  double alpha;
  double beta;
  double center() const { return 0.5 * (alpha + beta); }  // gamma
  double radius() const { return 0.5 * (beta - alpha); }  // xi
};

struct EigenvalueEntry {
  Complex value;
  Index algebraic;  // multiplicity as a pencil root
  Index geometric;  // dim ker(T - value I)
};

struct SpectrumReport {
  bool degenerate = false;  // sigma(T) = C; eigenvalue list empty when set
  bool has_infinite_eigenvalue = false;  // mul T != {0}
  Index infinite_algebraic = 0;          // pencil multiplicity at infinity
  bool spectrum_real = false;
  std::vector<EigenvalueEntry> eigenvalues;
};

/// Eigenvalues of T via the matrix pencil B2 - lambda B1. A pencil that is
/// non-square or vanishes identically is reported degenerate (rho(T) empty),
/// not treated as an error. Selfadjoint relations are routed through the
/// Hermitian operator part instead of the general pencil.
SpectrumReport spectrum(const LinearRelation& t);

/// The matrix of (T - zeta I)^{-1} for zeta in the regular set of T.
/// Throws NotInRegularSet carrying which of injectivity / surjectivity
/// failed.
Matrix resolvent(const LinearRelation& t, Complex zeta);

struct SpectralProjection {
  double eigenvalue;
  Index multiplicity;
  Matrix projection;  // n x n, range inside the carrier
};

/// Spectral decomposition of the operator part of a selfadjoint relation on
/// (mul A)^⊥.
struct SpectralMeasure {
  Subspace carrier;
  std::vector<SpectralProjection> eigenpairs;
};

SpectralMeasure spectral_measure(const LinearRelation& a);

/// mu_A(Delta) with an endpoint side channel: eigenvalues within
/// tol * max(1, |alpha|, |beta|) of an endpoint are excluded from the count
/// and listed in near_endpoint.
struct MuCount {
  Index count = 0;
  std::vector<double> near_endpoint;
  bool endpoint_collision() const { return !near_endpoint.empty(); }
};

MuCount mu_count(const LinearRelation& a, const Interval& delta);
MuCount mu_count(const SpectralMeasure& measure, const Interval& delta, double tol);

/// Whether Delta = (gamma - xi, gamma + xi) is a spectral lacuna of the
/// symmetric relation s: ||f|| <= ||g - gamma f|| / xi on the graph,
/// equivalently (B2-gamma B1)^H (B2-gamma B1) - xi^2 B1^H B1 >= 0.
bool is_lacuna(const LinearRelation& s, const Interval& delta);

/// Always empty in finite dimension; the note spells out why.
struct EssentialSpectrum {
  std::vector<double> points;
  std::string note;
};

EssentialSpectrum essential_spectrum(const LinearRelation& a);

}  // namespace relcalc
