#pragma once

#include <vector>

#include "relcalc/relation.hpp"
#include "relcalc/types.hpp"

namespace relcalc {

/// Extension parameter in R ∪ {∞}. Infinity is a distinct state, not a
/// large float: the corresponding extension is a genuine relation.
class Tau {
 public:
  static Tau finite(double value) { return Tau(false, value); }
  static Tau infinite() { return Tau(true, 0.0); }
  bool is_infinite() const { return infinite_; }
  double value() const { return value_; }

 private:
  Tau(bool inf, double v) : infinite_(inf), value_(v) {}
  bool infinite_;
  double value_;
};

/// Real symmetric tridiagonal matrix with the given diagonal (length n) and
/// positive off-diagonal (length n-1).
Matrix jacobi(Index n, const std::vector<double>& diagonal,
              const std::vector<double>& offdiagonal);

/// Free Jacobi matrix: zero diagonal, unit off-diagonal.
Matrix jacobi_free(Index n);

/// B_δ: the Hermitian operator j restricted to dom ⊖ span{deltas}. The
/// result is closed, symmetric, non-densely defined, with deficiency
/// indices equal to the number of deltas (verified).
LinearRelation restrict_operator(const Matrix& j, const std::vector<Vector>& deltas,
                                 double tol = kDefaultTol);

/// Krylov criterion: {δ, Jδ, ..., J^{n-1}δ} spans C^n, i.e. δ is a
/// generating (cyclic) element of the Hermitian matrix j.
bool is_generating(const Matrix& j, const Vector& delta, double tol = kDefaultTol);

/// The one-parameter family of selfadjoint extensions of B_δ:
///   J(τ)  = graph(J + τ δδ^H)            for finite τ,
///   J(∞)  = B_δ ∔ span{(0, δ)}           with mul = span{δ}.
class ExtensionFamily {
 public:
  ExtensionFamily(Matrix j, Vector delta, double tol = kDefaultTol);

  const Matrix& base() const { return j_; }
  const Vector& delta() const { return delta_; }
  const LinearRelation& restriction() const { return restriction_; }
  double tol() const { return tol_; }

  /// J(τ) or J(∞); the result is verified to extend B_δ (and, for τ = ∞,
  /// to be selfadjoint with mul = span{δ}).
  LinearRelation extension(Tau tau) const;

 private:
  Matrix j_;
  Vector delta_;
  double tol_;
  LinearRelation restriction_;
};

/// The unique maximal dissipative extension A = S ∔ N_λ(S^*) of a closed
/// symmetric s with eigenvalue λ; selfadjoint iff λ is real. Requires
/// Im λ >= 0 and λ quasi-regular for s.
LinearRelation extension_with_eigenvalue(const LinearRelation& s, Complex lambda);

/// The two-vector restriction S = J restricted off span{δ1, δ2} together
/// with the extensions J_δ1, J_δ2 whose multivalued parts differ.
struct TwoDefectRestriction {
  TwoDefectRestriction(const Matrix& j, const Vector& delta1, const Vector& delta2,
                       double tol = kDefaultTol);
  LinearRelation restriction;  // eta_±(S) = 2 (verified)
  LinearRelation extension1;   // B_δ1 ∔ span{(0, δ1)}
  LinearRelation extension2;   // B_δ2 ∔ span{(0, δ2)}
};

struct SweepRow {
  Tau tau;
  Index k;        // 1-based index into the sorted spectrum
  double lambda;  // k-th eigenvalue of J(tau)
};

/// Spectra of J(τ) over a τ grid, one row per (τ, eigenvalue), sorted by
/// (τ, k) with ∞ ordered last.
std::vector<SweepRow> family_sweep(const ExtensionFamily& fam,
                                   const std::vector<Tau>& taus);

}  // namespace relcalc
