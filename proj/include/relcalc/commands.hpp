#pragma once

#include <string>
#include <vector>

#include "relcalc/extensions.hpp"
#include "relcalc/io.hpp"
#include "relcalc/perturb.hpp"
#include "relcalc/types.hpp"

namespace relcalc {

/// Report plus overall verdict state. ok is false exactly when a requested
/// verdict failed or the inputs could not be processed.
struct CommandResult {
  Json report;
  std::string csv;  // filled by sweep
  bool ok = true;
};

/// Classification flags, part dimensions and deficiency indices at ∓i.
CommandResult cmd_classify(const RelationDocument& input);

/// Resolvent-difference rank, per-interval counting verdicts and
/// per-eigenvalue eigenspace verdicts for a pair of relations.
CommandResult cmd_perturb(const RelationDocument& input_a,
                          const RelationDocument& input_l, Complex zeta,
                          const std::vector<Interval>& intervals);

struct JacobiSpec {
  Index n = 0;
  std::vector<double> diagonal;     // empty: zeros
  std::vector<double> offdiagonal;  // empty: ones
};

/// Eigenvalue table of the extension family J(tau) of a Jacobi matrix with
/// delta the k-th canonical basis vector (1-based).
CommandResult cmd_sweep(const JacobiSpec& spec, Index delta_index,
                        const std::vector<Tau>& taus, double tol);

/// Truncated free-Jacobi study: eigenvalues of J_N(tau) outside
/// [-2 - margin, 2 + margin] for growing N, with the rank-one counting
/// bound asserted at every size.
CommandResult cmd_truncation(const std::vector<Index>& sizes, Tau tau,
                             double band_margin, double tol);

}  // namespace relcalc
