#pragma once

#include <optional>
#include <string>

#include "relcalc/classify.hpp"
#include "relcalc/relation.hpp"
#include "relcalc/spectral.hpp"
#include "relcalc/types.hpp"

namespace relcalc {

enum class ClaimId {
  RankVsAdditive,    // rank F <= rank V for L = A + V
  RankVsDeficiency,  // rank F <= eta_-(S) for extensions A, L of S
  EigenspaceBounds,  // dim[ker(A-λ) ⊖ G_λ] <= rank F etc.
  CountingBounds,    // |mu_A(Δ) - mu_L(Δ)| <= rank F
  LacunaBound,       // mu_A(Δ) <= eta_-(S) on a lacuna Δ of S
  Interlacing,       // alternating simple spectra of two extensions
};

const char* to_string(ClaimId id);

/// F = (L - zeta)^{-1} - (A - zeta)^{-1} with its SVD rank. rank_uncertain
/// is set when a singular value falls within a factor 10 of the rank
/// threshold, or when a second regular sample point disagrees on the rank.
struct ResolventDifference {
  Complex zeta;
  Matrix f;
  Index rank = 0;
  bool rank_uncertain = false;
  std::optional<Complex> second_zeta;
  std::optional<Index> second_rank;
};

ResolventDifference resolvent_difference(const LinearRelation& a,
                                         const LinearRelation& l, Complex zeta);

struct Witness {
  std::string detail;
  std::optional<Complex> lambda;
  std::optional<Interval> interval;
};

/// Pass/fail record for one theorem inequality. "inconclusive" marks
/// verdicts whose counting data collided with an interval endpoint; such
/// verdicts are never reported as failures. A witness is present iff the
/// inequality was genuinely refuted.
struct PerturbationVerdict {
  ClaimId claim;
  double lhs = 0;
  double rhs = 0;
  bool holds = true;
  bool inconclusive = false;
  bool rank_uncertain = false;
  std::optional<Witness> witness;
};

/// rank F <= rank V for L = A + V, with A, V maximal dissipative and V an
/// everywhere-defined operator.
PerturbationVerdict check_rank_vs_additive(const LinearRelation& a,
                                           const LinearRelation& v, Complex zeta);

/// rank F <= eta_-(S) for maximal dissipative extensions A, L of S;
/// membership S ⊆ A and S ⊆ L is verified, not trusted.
PerturbationVerdict check_rank_vs_deficiency(const LinearRelation& a,
                                             const LinearRelation& l,
                                             const LinearRelation& s, Complex zeta);

/// With G_λ = ker(A-λI) ∩ ker(L-λI): dim[ker(A-λI) ⊖ G_λ] <= rank F,
/// dim[ker(L-λI) ⊖ G_λ] <= rank F, and |mu_A(λ) - mu_L(λ)| <= rank F.
PerturbationVerdict eigenspace_comparison(const LinearRelation& a,
                                          const LinearRelation& l, Complex lambda,
                                          Complex zeta);

/// mu_A(Δ) - rank F <= mu_L(Δ) <= mu_A(Δ) + rank F for selfadjoint A, L.
PerturbationVerdict check_counting_bounds(const LinearRelation& a,
                                          const LinearRelation& l,
                                          const Interval& delta, Complex zeta);

/// mu_A(Δ) <= eta_-(S) for a selfadjoint extension A of S when Δ is a
/// lacuna of S.
PerturbationVerdict check_lacuna_bound(const LinearRelation& a,
                                       const LinearRelation& s,
                                       const Interval& delta);

/// Spectra of two distinct selfadjoint extensions of a deficiency-(1,1)
/// symmetric relation inside Δ: simple, disjoint, strictly alternating.
/// The common symmetric part is taken to be A ∩ L and its indices verified.
PerturbationVerdict interlacing_check(const LinearRelation& a,
                                      const LinearRelation& l,
                                      const Interval& delta);

}  // namespace relcalc
