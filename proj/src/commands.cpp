#include "relcalc/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "relcalc/classify.hpp"
#include "relcalc/errors.hpp"
#include "relcalc/spectral.hpp"

namespace relcalc {

namespace {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

Json interval_to_json(const Interval& delta) {
  return Json::array({delta.alpha, delta.beta});
}

Json classify_relation(const LinearRelation& t) {
  const Complex i(0.0, 1.0);
  RelationParts p = parts(t);
  const bool dissipative = is_dissipative(t);
  Json out;
  out["space_dim"] = t.space_dim();
  out["graph_dim"] = t.dim();
  out["flags"] = Json{{"symmetric", is_symmetric(t)},
                      {"dissipative", dissipative},
                      {"selfadjoint", is_selfadjoint(t)},
                      {"bounded", is_bounded(t)},
                      {"maximal_dissipative", is_maximal_dissipative(t)}};
  out["parts"] = Json{{"dom", p.dom.dim()},
                      {"ran", p.ran.dim()},
                      {"ker", p.ker.dim()},
                      {"mul", p.mul.dim()}};
  out["deficiency"] = Json{{"eta_plus", deficiency_index(t, i)},
                           {"eta_minus", deficiency_index(t, -i)}};
  if (dissipative) out["domain_guard"] = domain_in_mul_complement(t);
  return out;
}

Json verdict_to_json(const PerturbationVerdict& v) {
  Json out;
  out["claim"] = to_string(v.claim);
  out["lhs"] = v.lhs;
  out["rhs"] = v.rhs;
  out["holds"] = v.holds;
  out["inconclusive"] = v.inconclusive;
  out["rank_uncertain"] = v.rank_uncertain;
  if (v.witness) {
    Json w;
    w["detail"] = v.witness->detail;
    if (v.witness->lambda) w["lambda"] = complex_to_json(*v.witness->lambda);
    if (v.witness->interval) w["interval"] = interval_to_json(*v.witness->interval);
    out["witness"] = std::move(w);
  }
  return out;
}

}  // namespace

CommandResult cmd_classify(const RelationDocument& input) {
  CommandResult result;
  LinearRelation t = input.to_relation();
  result.report["command"] = Json{{"name", "classify"}, {"tol", input.tol}};
  result.report["results"] = classify_relation(t);
  result.report["warnings"] = Json::array();
  return result;
}

CommandResult cmd_perturb(const RelationDocument& input_a,
                          const RelationDocument& input_l, Complex zeta,
                          const std::vector<Interval>& intervals) {
  CommandResult result;
  Json warnings = Json::array();
  result.report["command"] =
      Json{{"name", "perturb"}, {"zeta", complex_to_json(zeta)}};

  LinearRelation a = input_a.to_relation();
  LinearRelation l = input_l.to_relation();
  Json results;
  results["classification"] = Json{{"A", classify_relation(a)}, {"L", classify_relation(l)}};

  const bool both_md = is_maximal_dissipative(a) && is_maximal_dissipative(l);
  const bool both_sa = is_selfadjoint(a) && is_selfadjoint(l);
  if (!both_md) {
    result.report["error"] = "inputs must be maximal dissipative relations";
    result.report["results"] = std::move(results);
    result.report["warnings"] = std::move(warnings);
    result.ok = false;
    return result;
  }

  ResolventDifference rd;
  try {
    rd = resolvent_difference(a, l, zeta);
  } catch (const NotInRegularSet& e) {
    // Suggest an alternate sample point that is regular for both relations.
    Json suggestion;
    for (int k = 1; k <= 8 && suggestion.is_null(); ++k) {
      for (double side : {1.0, -1.0}) {
        const Complex candidate(0.0, side * (0.6 + 0.8 * k));
        try {
          resolvent(a, candidate);
          resolvent(l, candidate);
          suggestion = complex_to_json(candidate);
          break;
        } catch (const NotInRegularSet&) {
        }
      }
    }
    result.report["error"] = std::string("zeta is not regular for both inputs: ") + e.what();
    if (!suggestion.is_null()) result.report["suggested_zeta"] = std::move(suggestion);
    result.report["results"] = std::move(results);
    result.report["warnings"] = std::move(warnings);
    result.ok = false;
    return result;
  }

  results["resolvent_difference"] =
      Json{{"zeta", complex_to_json(rd.zeta)},
           {"rank", rd.rank},
           {"rank_uncertain", rd.rank_uncertain}};
  if (rd.second_zeta)
    results["resolvent_difference"]["second_zeta"] = complex_to_json(*rd.second_zeta);
  if (rd.second_rank)
    results["resolvent_difference"]["second_rank"] = *rd.second_rank;
  if (rd.rank_uncertain) warnings.push_back("resolvent difference rank is uncertain");

  bool all_hold = true;

  Json counting = Json::array();
  if (both_sa) {
    for (const Interval& delta : intervals) {
      PerturbationVerdict v = check_counting_bounds(a, l, delta, zeta);
      Json entry = verdict_to_json(v);
      entry["interval"] = interval_to_json(delta);
      entry["mu_A"] = mu_count(a, delta).count;
      entry["mu_L"] = mu_count(l, delta).count;
      if (v.inconclusive)
        warnings.push_back("endpoint collision in interval [" +
                           format_double(delta.alpha) + ", " +
                           format_double(delta.beta) + "]");
      all_hold = all_hold && v.holds;
      counting.push_back(std::move(entry));
    }
  } else if (!intervals.empty()) {
    warnings.push_back("counting bounds skipped: inputs are not both selfadjoint");
  }
  results["counting"] = std::move(counting);

  // Candidate eigenvalues: union of the two point spectra.
  std::vector<Complex> candidates;
  for (const LinearRelation* rel : {&a, &l}) {
    SpectrumReport report = spectrum(*rel);
    if (report.degenerate) continue;
    for (const auto& entry : report.eigenvalues) candidates.push_back(entry.value);
  }
  std::sort(candidates.begin(), candidates.end(), [](Complex x, Complex y) {
    if (x.real() != y.real()) return x.real() < y.real();
    return x.imag() < y.imag();
  });
  std::vector<Complex> unique;
  for (Complex c : candidates)
    if (unique.empty() || std::abs(c - unique.back()) > 1e-8 * std::max(1.0, std::abs(c)))
      unique.push_back(c);

  Json eigenspaces = Json::array();
  for (Complex lambda : unique) {
    PerturbationVerdict v = eigenspace_comparison(a, l, lambda, zeta);
    Json entry = verdict_to_json(v);
    entry["lambda"] = complex_to_json(lambda);
    entry["mu_A"] = eigenvalue_multiplicity(a, lambda);
    entry["mu_L"] = eigenvalue_multiplicity(l, lambda);
    all_hold = all_hold && v.holds;
    eigenspaces.push_back(std::move(entry));
  }
  results["eigenspace"] = std::move(eigenspaces);

  result.report["results"] = std::move(results);
  result.report["warnings"] = std::move(warnings);
  result.ok = all_hold;
  return result;
}

CommandResult cmd_sweep(const JacobiSpec& spec, Index delta_index,
                        const std::vector<Tau>& taus, double tol) {
  if (spec.n < 1) throw InvalidArgument("sweep: jacobi size must be positive");
  if (delta_index < 1 || delta_index > spec.n)
    throw InvalidArgument("sweep: delta index out of range");
  std::vector<double> diagonal = spec.diagonal;
  std::vector<double> offdiagonal = spec.offdiagonal;
  if (diagonal.empty()) diagonal.assign(static_cast<size_t>(spec.n), 0.0);
  if (offdiagonal.empty()) offdiagonal.assign(static_cast<size_t>(spec.n - 1), 1.0);
  Matrix j = jacobi(spec.n, diagonal, offdiagonal);
  Vector delta = Vector::Zero(spec.n);
  delta(delta_index - 1) = 1.0;

  ExtensionFamily fam(j, delta, tol);
  std::vector<SweepRow> rows = family_sweep(fam, taus);

  CommandResult result;
  result.report["command"] = Json{{"name", "sweep"},
                                  {"jacobi", spec.n},
                                  {"delta", delta_index},
                                  {"tol", tol}};
  std::string csv = "tau,k,lambda\n";
  Json json_rows = Json::array();
  for (const SweepRow& row : rows) {
    const std::string tau_text =
        row.tau.is_infinite() ? "inf" : format_double(row.tau.value());
    csv += tau_text + "," + std::to_string(row.k) + "," + format_double(row.lambda) + "\n";
    Json entry;
    entry["tau"] = row.tau.is_infinite() ? Json("inf") : Json(row.tau.value());
    entry["k"] = row.k;
    entry["lambda"] = row.lambda;
    json_rows.push_back(std::move(entry));
  }
  result.report["results"] = Json{{"rows", std::move(json_rows)}};
  result.report["warnings"] = Json::array();
  result.csv = std::move(csv);
  return result;
}

CommandResult cmd_truncation(const std::vector<Index>& sizes, Tau tau,
                             double band_margin, double tol) {
  if (sizes.empty()) throw InvalidArgument("truncation: empty size list");
  for (size_t k = 0; k < sizes.size(); ++k) {
    if (sizes[k] < 2) throw InvalidArgument("truncation: sizes must be >= 2");
    if (k > 0 && sizes[k] <= sizes[k - 1])
      throw InvalidArgument("truncation: sizes must be strictly increasing");
  }
  if (!(band_margin >= 0.0)) throw InvalidArgument("truncation: negative band margin");

  const double lo = -2.0 - band_margin;
  const double hi = 2.0 + band_margin;
  constexpr int kGrid = 41;

  CommandResult result;
  result.report["command"] =
      Json{{"name", "truncation"},
           {"tau", tau.is_infinite() ? Json("inf") : Json(tau.value())},
           {"band", Json::array({lo, hi})},
           {"tol", tol}};

  bool all_hold = true;
  Json per_size = Json::array();
  std::vector<std::vector<double>> cdfs;
  std::vector<double> top_out_of_band;  // largest out-of-band eigenvalue per size

  for (Index n : sizes) {
    ExtensionFamily fam(jacobi_free(n), Vector::Unit(n, 0), tol);
    SpectralMeasure sm = spectral_measure(fam.extension(tau));
    std::vector<double> eigenvalues;
    for (const auto& pair : sm.eigenpairs)
      for (Index copy = 0; copy < pair.multiplicity; ++copy)
        eigenvalues.push_back(pair.eigenvalue);
    std::sort(eigenvalues.begin(), eigenvalues.end());

    Json out_of_band = Json::array();
    Index in_band = 0;
    for (double lambda : eigenvalues) {
      if (lambda < lo || lambda > hi)
        out_of_band.push_back(lambda);
      else
        ++in_band;
    }
    const Index out_count = static_cast<Index>(out_of_band.size());
    const bool holds = out_count <= 1;  // rank-one counting bound
    all_hold = all_hold && holds;

    std::vector<double> cdf(kGrid, 0.0);
    const double total = static_cast<double>(eigenvalues.size());
    for (int g = 0; g < kGrid; ++g) {
      const double x = -2.0 + 4.0 * g / (kGrid - 1);
      Index below = 0;
      for (double lambda : eigenvalues)
        if (lambda >= lo && lambda <= x) ++below;
      cdf[static_cast<size_t>(g)] = total > 0 ? below / total : 0.0;
    }
    cdfs.push_back(std::move(cdf));
    top_out_of_band.push_back(out_of_band.empty()
                                  ? std::numeric_limits<double>::quiet_NaN()
                                  : out_of_band.back().get<double>());

    per_size.push_back(Json{{"n", n},
                            {"out_of_band", std::move(out_of_band)},
                            {"out_of_band_count", out_count},
                            {"in_band_count", in_band},
                            {"holds", holds}});
  }

  Json out_drift = Json::array();
  Json cdf_drift = Json::array();
  for (size_t k = 1; k < sizes.size(); ++k) {
    if (std::isfinite(top_out_of_band[k]) && std::isfinite(top_out_of_band[k - 1]))
      out_drift.push_back(std::abs(top_out_of_band[k] - top_out_of_band[k - 1]));
    else
      out_drift.push_back(nullptr);
    double worst = 0.0;
    for (int g = 0; g < kGrid; ++g)
      worst = std::max(worst, std::abs(cdfs[k][static_cast<size_t>(g)] -
                                       cdfs[k - 1][static_cast<size_t>(g)]));
    cdf_drift.push_back(worst);
  }

  result.report["results"] = Json{{"sizes", std::move(per_size)},
                                  {"convergence", Json{{"out_of_band_drift", std::move(out_drift)},
                                                       {"cdf_drift", std::move(cdf_drift)}}}};
  result.report["warnings"] = Json::array();
  result.ok = all_hold;
  return result;
}

}  // namespace relcalc
