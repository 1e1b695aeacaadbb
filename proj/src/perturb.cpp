#include "relcalc/perturb.hpp"

#include <algorithm>
#include <cmath>

#include "relcalc/errors.hpp"
#include "internal.hpp"

namespace relcalc {

const char* to_string(ClaimId id) {
  switch (id) {
    case ClaimId::RankVsAdditive: return "rank_vs_additive";
    case ClaimId::RankVsDeficiency: return "rank_vs_deficiency";
    case ClaimId::EigenspaceBounds: return "eigenspace_bounds";
    case ClaimId::CountingBounds: return "counting_bounds";
    case ClaimId::LacunaBound: return "lacuna_bound";
    case ClaimId::Interlacing: return "interlacing";
  }
  return "unknown";
}

namespace {

struct RankInfo {
  Index rank;
  bool uncertain;
};

RankInfo svd_rank_flagged(const Matrix& f, double tol) {
  auto svd = internal::svd_rank(f, tol, false, false);
  const double thresh = internal::rank_threshold(svd.sigma, tol);
  bool uncertain = false;
  for (Index k = 0; k < svd.sigma.size(); ++k) {
    const double s = svd.sigma(k);
    if (s > thresh / 10.0 && s < thresh * 10.0) uncertain = true;
  }
  return RankInfo{svd.rank, uncertain};
}

}  // namespace

ResolventDifference resolvent_difference(const LinearRelation& a,
                                         const LinearRelation& l, Complex zeta) {
  const double tol = std::max(a.tol(), l.tol());
  ResolventDifference out;
  out.zeta = zeta;
  out.f = resolvent(l, zeta) - resolvent(a, zeta);
  RankInfo info = svd_rank_flagged(out.f, tol);
  out.rank = info.rank;
  out.rank_uncertain = info.uncertain;

  // Rank is constant over the regular set; verify at a second sample point,
  // staying in the same half-plane as zeta.
  const double unit = 1.0 + std::abs(zeta);
  const double dir = zeta.imag() >= 0.0 ? 1.0 : -1.0;
  const Complex candidates[] = {
      zeta + Complex(0.0, dir * 0.71) * unit,
      zeta + Complex(0.37, dir * 0.59) * unit,
      zeta + Complex(-0.29, dir * 0.83) * unit,
  };
  for (Complex zeta2 : candidates) {
    try {
      Matrix f2 = resolvent(l, zeta2) - resolvent(a, zeta2);
      out.second_zeta = zeta2;
      out.second_rank = svd_rank_flagged(f2, tol).rank;
      if (*out.second_rank != out.rank) out.rank_uncertain = true;
      break;
    } catch (const NotInRegularSet&) {
      continue;
    }
  }
  return out;
}

PerturbationVerdict check_rank_vs_additive(const LinearRelation& a,
                                           const LinearRelation& v, Complex zeta) {
  if (!is_maximal_dissipative(a))
    throw PreconditionFailed("rank_vs_additive: A is not maximal dissipative");
  if (!is_maximal_dissipative(v))
    throw PreconditionFailed("rank_vs_additive: V is not maximal dissipative");
  RelationParts pv = parts(v);
  if (pv.dom.dim() != v.space_dim() || pv.mul.dim() != 0)
    throw PreconditionFailed("rank_vs_additive: V is not an everywhere-defined operator");

  LinearRelation l = add(a, v);
  ResolventDifference rd = resolvent_difference(a, l, zeta);
  PerturbationVerdict verdict;
  verdict.claim = ClaimId::RankVsAdditive;
  verdict.lhs = static_cast<double>(rd.rank);
  verdict.rhs = static_cast<double>(pv.ran.dim());
  verdict.holds = rd.rank <= pv.ran.dim();
  verdict.rank_uncertain = rd.rank_uncertain;
  if (!verdict.holds)
    verdict.witness = Witness{"rank F exceeds rank V", std::nullopt, std::nullopt};
  return verdict;
}

PerturbationVerdict check_rank_vs_deficiency(const LinearRelation& a,
                                             const LinearRelation& l,
                                             const LinearRelation& s, Complex zeta) {
  const auto sub_a = compare(s, a);
  if (sub_a != SubspaceOrder::ASubsetB && sub_a != SubspaceOrder::Equal)
    throw ExtensionCheckFailed("rank_vs_deficiency: S is not contained in A");
  const auto sub_l = compare(s, l);
  if (sub_l != SubspaceOrder::ASubsetB && sub_l != SubspaceOrder::Equal)
    throw ExtensionCheckFailed("rank_vs_deficiency: S is not contained in L");
  if (!is_maximal_dissipative(a))
    throw PreconditionFailed("rank_vs_deficiency: A is not maximal dissipative");
  if (!is_maximal_dissipative(l))
    throw PreconditionFailed("rank_vs_deficiency: L is not maximal dissipative");
  if (!(zeta.imag() < 0.0))
    throw PreconditionFailed("rank_vs_deficiency: zeta must lie in the lower half-plane");

  ResolventDifference rd = resolvent_difference(a, l, zeta);
  const Index eta = deficiency_index(s, zeta);
  PerturbationVerdict verdict;
  verdict.claim = ClaimId::RankVsDeficiency;
  verdict.lhs = static_cast<double>(rd.rank);
  verdict.rhs = static_cast<double>(eta);
  verdict.holds = rd.rank <= eta;
  verdict.rank_uncertain = rd.rank_uncertain;
  if (!verdict.holds)
    verdict.witness = Witness{"rank F exceeds eta_-(S)", std::nullopt, std::nullopt};
  return verdict;
}

PerturbationVerdict eigenspace_comparison(const LinearRelation& a,
                                          const LinearRelation& l, Complex lambda,
                                          Complex zeta) {
  if (!is_maximal_dissipative(a))
    throw PreconditionFailed("eigenspace_comparison: A is not maximal dissipative");
  if (!is_maximal_dissipative(l))
    throw PreconditionFailed("eigenspace_comparison: L is not maximal dissipative");

  ResolventDifference rd = resolvent_difference(a, l, zeta);
  Subspace ker_a = eigenspace(a, lambda);
  Subspace ker_l = eigenspace(l, lambda);
  Subspace g = intersect(ker_a, ker_l);
  // G_lambda ⊆ both kernels, so the ⊖ dimensions are plain differences.
  const Index excess_a = ker_a.dim() - g.dim();
  const Index excess_l = ker_l.dim() - g.dim();
  const Index mu_gap = std::abs(ker_a.dim() - ker_l.dim());

  PerturbationVerdict verdict;
  verdict.claim = ClaimId::EigenspaceBounds;
  verdict.lhs = static_cast<double>(std::max({excess_a, excess_l, mu_gap}));
  verdict.rhs = static_cast<double>(rd.rank);
  verdict.holds = verdict.lhs <= verdict.rhs;
  verdict.rank_uncertain = rd.rank_uncertain;
  if (!verdict.holds)
    verdict.witness = Witness{"eigenspace bound violated", lambda, std::nullopt};
  return verdict;
}

PerturbationVerdict check_counting_bounds(const LinearRelation& a,
                                          const LinearRelation& l,
                                          const Interval& delta, Complex zeta) {
  ResolventDifference rd = resolvent_difference(a, l, zeta);
  MuCount mu_a = mu_count(a, delta);  // throws NotSelfadjoint as needed
  MuCount mu_l = mu_count(l, delta);

  PerturbationVerdict verdict;
  verdict.claim = ClaimId::CountingBounds;
  verdict.lhs = static_cast<double>(std::abs(mu_a.count - mu_l.count));
  verdict.rhs = static_cast<double>(rd.rank);
  verdict.inconclusive = mu_a.endpoint_collision() || mu_l.endpoint_collision();
  verdict.rank_uncertain = rd.rank_uncertain;
  const bool ok = verdict.lhs <= verdict.rhs;
  verdict.holds = ok || verdict.inconclusive;
  if (!ok && !verdict.inconclusive)
    verdict.witness = Witness{"counting bound violated", std::nullopt, delta};
  return verdict;
}

PerturbationVerdict check_lacuna_bound(const LinearRelation& a,
                                       const LinearRelation& s,
                                       const Interval& delta) {
  if (!is_selfadjoint(a))
    throw ExtensionCheckFailed("lacuna_bound: A is not a selfadjoint extension of S");
  const auto sub = compare(s, a);
  if (sub != SubspaceOrder::ASubsetB && sub != SubspaceOrder::Equal)
    throw ExtensionCheckFailed("lacuna_bound: S is not contained in A");
  if (!is_lacuna(s, delta))
    throw NotALacuna("lacuna_bound: interval is not a lacuna of S");

  MuCount mu = mu_count(a, delta);
  const Index eta = deficiency_index(s, Complex(0.0, -1.0));
  PerturbationVerdict verdict;
  verdict.claim = ClaimId::LacunaBound;
  verdict.lhs = static_cast<double>(mu.count);
  verdict.rhs = static_cast<double>(eta);
  verdict.inconclusive = mu.endpoint_collision();
  const bool ok = mu.count <= eta;
  verdict.holds = ok || verdict.inconclusive;
  if (!ok && !verdict.inconclusive)
    verdict.witness = Witness{"mu_A(Delta) exceeds eta_-(S)", std::nullopt, delta};
  return verdict;
}

PerturbationVerdict interlacing_check(const LinearRelation& a,
                                      const LinearRelation& l,
                                      const Interval& delta) {
  if (!is_selfadjoint(a))
    throw PreconditionFailed("interlacing: A is not selfadjoint");
  if (!is_selfadjoint(l))
    throw PreconditionFailed("interlacing: L is not selfadjoint");
  if (equal(a, l)) throw PreconditionFailed("interlacing: relations are identical");

  LinearRelation s(a.space_dim(), intersect(a.graph(), l.graph()));
  const Index eta_plus = deficiency_index(s, Complex(0.0, 1.0));
  const Index eta_minus = deficiency_index(s, Complex(0.0, -1.0));
  if (eta_plus != 1 || eta_minus != 1)
    throw PreconditionFailed(
        "interlacing: common restriction does not have deficiency indices (1,1)");

  const double tol = std::max(a.tol(), l.tol());
  struct Entry {
    double lambda;
    Index mult;
    int label;  // 0 = A, 1 = L
  };
  std::vector<Entry> entries;
  bool collision = false;
  for (int label = 0; label < 2; ++label) {
    SpectralMeasure sm = spectral_measure(label == 0 ? a : l);
    MuCount probe = mu_count(sm, delta, tol);
    collision = collision || probe.endpoint_collision();
    for (const auto& pair : sm.eigenpairs)
      if (pair.eigenvalue > delta.alpha && pair.eigenvalue < delta.beta)
        entries.push_back(Entry{pair.eigenvalue, pair.multiplicity, label});
  }
  std::sort(entries.begin(), entries.end(),
            [](const Entry& x, const Entry& y) { return x.lambda < y.lambda; });

  PerturbationVerdict verdict;
  verdict.claim = ClaimId::Interlacing;
  verdict.inconclusive = collision;
  verdict.rhs = 0.0;
  std::optional<Witness> witness;
  const auto fail = [&](const std::string& what, double where) {
    if (!witness) witness = Witness{what, Complex(where, 0.0), delta};
    verdict.lhs += 1.0;
  };
  for (size_t k = 0; k < entries.size(); ++k) {
    if (entries[k].mult != 1) fail("multiplicity exceeds one", entries[k].lambda);
    if (k > 0) {
      const double gap = entries[k].lambda - entries[k - 1].lambda;
      const double band = 1e-8 * std::max(1.0, std::abs(entries[k].lambda));
      if (entries[k].label != entries[k - 1].label && gap <= band)
        fail("common eigenvalue", entries[k].lambda);
      else if (entries[k].label == entries[k - 1].label)
        fail("two consecutive eigenvalues of the same relation", entries[k].lambda);
    }
  }
  const bool ok = verdict.lhs == 0.0;
  verdict.holds = ok || verdict.inconclusive;
  if (!ok && !verdict.inconclusive) verdict.witness = witness;
  return verdict;
}

}  // namespace relcalc
