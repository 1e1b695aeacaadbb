#pragma once

#include "relcalc/relation.hpp"
#include "relcalc/types.hpp"

namespace relcalc {

/// Deficiency index and deficiency space of T at a test point zeta.
struct DeficiencyData {
  Complex zeta;
  Index index;           // dim [ran(T - zeta I)]^⊥
  LinearRelation space;  // N_zeta(T) = {(f, zeta f) ∈ T}
};

DeficiencyData deficiency(const LinearRelation& t, Complex zeta);

/// The index alone, skipping the deficiency-space construction.
Index deficiency_index(const LinearRelation& t, Complex zeta);

/// The Hermitian form matrix (B1^H B2 - B2^H B1) / (2i); its values are
/// Im<f,g> over graph coefficient vectors.
Matrix hermitian_form(const LinearRelation& t);

/// Im<f,g> = 0 on the graph.
bool is_symmetric(const LinearRelation& t);

/// Im<f,g> >= 0 on the graph (positive semidefinite Hermitian form).
bool is_dissipative(const LinearRelation& t);

/// T = T^* as subspaces.
bool is_selfadjoint(const LinearRelation& t);

/// Which of the selfadjointness equivalences hold, for diagnosing failures:
/// T = T^*, eta_+ = eta_- = 0, and +/-i in the regular set (which for a
/// symmetric relation is equivalent to a real spectrum).
struct SelfadjointDiagnostic {
  bool selfadjoint;
  bool deficiency_zero;
  bool nonreal_points_regular;
  Index eta_plus;
  Index eta_minus;
};

SelfadjointDiagnostic selfadjoint_diagnostic(const LinearRelation& t);

/// mul T = {0}; in finite dimension this is exactly the paper's bound
/// ||g|| <= C ||f||.
bool is_bounded(const LinearRelation& t);

/// Dissipative with eta_-(T) = 0 (no proper dissipative extension).
bool is_maximal_dissipative(const LinearRelation& t);

/// mu_T(lambda) = dim ker(T - lambda I).
Index eigenvalue_multiplicity(const LinearRelation& t, Complex lambda);

/// dom T ⊆ (mul T)^⊥ — holds for every dissipative relation; used as a
/// guard on inputs classified dissipative.
bool domain_in_mul_complement(const LinearRelation& t);

}  // namespace relcalc
