#include "relcalc/classify.hpp"

#include <cmath>

#include "relcalc/errors.hpp"
#include "internal.hpp"

namespace relcalc {

Matrix hermitian_form(const LinearRelation& t) {
  const Matrix b1 = t.top();
  const Matrix b2 = t.bottom();
  return (b1.adjoint() * b2 - b2.adjoint() * b1) / Complex(0.0, 2.0);
}

bool is_symmetric(const LinearRelation& t) {
  if (t.dim() == 0) return true;
  const Matrix w = hermitian_form(t);
  const Matrix cross = t.top().adjoint() * t.bottom();
  const double scale = std::max(1.0, cross.cwiseAbs().maxCoeff());
  return w.cwiseAbs().maxCoeff() <= t.tol() * scale;
}

bool is_dissipative(const LinearRelation& t) {
  if (t.dim() == 0) return true;
  const Matrix w = hermitian_form(t);
  Eigen::SelfAdjointEigenSolver<Matrix> es(w, Eigen::EigenvaluesOnly);
  const double largest = es.eigenvalues().cwiseAbs().maxCoeff();
  return es.eigenvalues().minCoeff() >= -t.tol() * std::max(1.0, largest);
}

bool is_selfadjoint(const LinearRelation& t) { return equal(t, adjoint(t)); }

Index deficiency_index(const LinearRelation& t, Complex zeta) {
  // ran(T - zeta I) is the column space of B2 - zeta B1.
  const Matrix shifted_range = t.bottom() - zeta * t.top();
  return t.space_dim() - internal::matrix_rank(shifted_range, t.tol());
}

DeficiencyData deficiency(const LinearRelation& t, Complex zeta) {
  const Index n = t.space_dim();
  Subspace pencil = scalar_pencil(n, zeta, t.tol());
  LinearRelation space(n, intersect(t.graph(), pencil));
  return DeficiencyData{zeta, deficiency_index(t, zeta), std::move(space)};
}

SelfadjointDiagnostic selfadjoint_diagnostic(const LinearRelation& t) {
  const Complex i(0.0, 1.0);
  SelfadjointDiagnostic d{};
  d.selfadjoint = is_selfadjoint(t);
  d.eta_plus = deficiency_index(t, i);
  d.eta_minus = deficiency_index(t, -i);
  d.deficiency_zero = d.eta_plus == 0 && d.eta_minus == 0;
  d.nonreal_points_regular = d.deficiency_zero &&
                             eigenvalue_multiplicity(t, i) == 0 &&
                             eigenvalue_multiplicity(t, -i) == 0;
  return d;
}

bool is_bounded(const LinearRelation& t) {
  return internal::nullspace(t.top(), t.tol()).cols() == 0;
}

bool is_maximal_dissipative(const LinearRelation& t) {
  return is_dissipative(t) && deficiency_index(t, Complex(0.0, -1.0)) == 0;
}

Index eigenvalue_multiplicity(const LinearRelation& t, Complex lambda) {
  return eigenspace(t, lambda).dim();
}

bool domain_in_mul_complement(const LinearRelation& t) {
  RelationParts p = parts(t);
  if (p.mul.dim() == 0 || p.dom.dim() == 0) return true;
  const Matrix overlap = p.mul.basis().adjoint() * p.dom.basis();
  double worst = 0.0;
  for (Index k = 0; k < overlap.cols(); ++k)
    worst = std::max(worst, overlap.col(k).norm());
  return worst <= t.tol();
}

}  // namespace relcalc
