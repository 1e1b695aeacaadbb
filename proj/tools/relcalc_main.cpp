#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "relcalc/commands.hpp"
#include "relcalc/errors.hpp"

namespace {

using namespace relcalc;

constexpr int kExitOk = 0;
constexpr int kExitVerdictFailed = 1;
constexpr int kExitUsage = 2;

double parse_double(const std::string& text, const std::string& what) {
  try {
    size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw ParseError(what + ": cannot parse '" + text + "' as a number");
  }
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, sep)) out.push_back(item);
  return out;
}

Complex parse_complex(const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() == 1) return Complex(parse_double(parts[0], "zeta"), 0.0);
  if (parts.size() == 2)
    return Complex(parse_double(parts[0], "zeta"), parse_double(parts[1], "zeta"));
  throw ParseError("zeta: expected re,im");
}

Interval parse_interval(const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() != 2) throw ParseError("interval: expected a,b");
  return Interval(parse_double(parts[0], "interval"),
                  parse_double(parts[1], "interval"));
}

Tau parse_tau(const std::string& text) {
  if (text == "inf" || text == "Inf" || text == "INF") return Tau::infinite();
  return Tau::finite(parse_double(text, "tau"));
}

std::vector<double> parse_double_list(const std::string& text, const std::string& what) {
  std::vector<double> out;
  for (const auto& item : split(text, ',')) out.push_back(parse_double(item, what));
  return out;
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw Error("cannot open output file " + out_path);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Calculus, classification, spectra, extensions and perturbation "
               "bounds for linear relations on finite-dimensional spaces"};
  app.require_subcommand(1);

  double tol = kDefaultTol;
  bool tol_given = false;
  if (const char* env = std::getenv("RELCALC_TOL")) {
    try {
      tol = parse_double(env, "RELCALC_TOL");
    } catch (const ParseError& e) {
      std::cerr << e.what() << "\n";
      return kExitUsage;
    }
  }
  std::uint64_t seed = 0;
  std::string out_path;
  std::string format;
  app.add_option("--tol", tol, "rank tolerance (overrides RELCALC_TOL)")
      ->check(CLI::PositiveNumber)
      ->each([&](const std::string&) { tol_given = true; });
  app.add_option("--seed", seed, "random seed echoed into reports");
  app.add_option("--out", out_path, "output file (default: stdout)");
  app.add_option("--format", format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  std::string classify_file;
  auto* classify_cmd = app.add_subcommand("classify", "classify a relation document");
  classify_cmd->add_option("file", classify_file, "relation JSON document")->required();

  std::string perturb_a, perturb_l, zeta_text = "0,1";
  std::vector<std::string> interval_texts;
  auto* perturb_cmd =
      app.add_subcommand("perturb", "resolvent-difference and counting verdicts");
  perturb_cmd->add_option("fileA", perturb_a, "relation document A")->required();
  perturb_cmd->add_option("fileL", perturb_l, "relation document L")->required();
  perturb_cmd->add_option("--zeta", zeta_text, "sample point re,im (default 0,1)");
  perturb_cmd->add_option("--interval", interval_texts, "interval a,b (repeatable)");

  Index sweep_n = 0;
  Index sweep_delta = 1;
  std::string sweep_taus, sweep_diag, sweep_offdiag;
  auto* sweep_cmd = app.add_subcommand("sweep", "spectra of the extension family J(tau)");
  sweep_cmd->add_option("--jacobi", sweep_n, "Jacobi matrix size")->required();
  sweep_cmd->add_option("--delta", sweep_delta, "canonical delta index (1-based)");
  sweep_cmd->add_option("--taus", sweep_taus, "comma list of tau values, inf allowed")
      ->required();
  sweep_cmd->add_option("--diag", sweep_diag, "diagonal entries (default zeros)");
  sweep_cmd->add_option("--offdiag", sweep_offdiag, "off-diagonal entries (default ones)");

  std::string trunc_sizes, trunc_tau = "inf";
  double band_margin = 0.01;
  auto* trunc_cmd = app.add_subcommand("truncation", "free-Jacobi truncation study");
  trunc_cmd->add_option("--sizes", trunc_sizes, "comma list of truncation sizes")
      ->required();
  trunc_cmd->add_option("--tau", trunc_tau, "extension parameter, inf allowed");
  trunc_cmd->add_option("--band-margin", band_margin, "margin around [-2, 2]");

  CLI11_PARSE(app, argc, argv);

  try {
    CommandResult result;
    bool csv_output = format == "csv";
    if (classify_cmd->parsed()) {
      if (csv_output) throw ParseError("classify emits JSON only");
      RelationDocument doc = RelationDocument::from_file(classify_file, tol);
      if (tol_given) doc.tol = tol;
      result = cmd_classify(doc);
    } else if (perturb_cmd->parsed()) {
      if (csv_output) throw ParseError("perturb emits JSON only");
      RelationDocument doc_a = RelationDocument::from_file(perturb_a, tol);
      RelationDocument doc_l = RelationDocument::from_file(perturb_l, tol);
      if (tol_given) {
        doc_a.tol = tol;
        doc_l.tol = tol;
      }
      std::vector<Interval> intervals;
      for (const auto& text : interval_texts) intervals.push_back(parse_interval(text));
      result = cmd_perturb(doc_a, doc_l, parse_complex(zeta_text), intervals);
    } else if (sweep_cmd->parsed()) {
      csv_output = format != "json";  // CSV is the sweep default
      JacobiSpec spec;
      spec.n = sweep_n;
      if (!sweep_diag.empty()) spec.diagonal = parse_double_list(sweep_diag, "diag");
      if (!sweep_offdiag.empty())
        spec.offdiagonal = parse_double_list(sweep_offdiag, "offdiag");
      std::vector<Tau> taus;
      if (!sweep_taus.empty())
        for (const auto& text : split(sweep_taus, ',')) taus.push_back(parse_tau(text));
      result = cmd_sweep(spec, sweep_delta, taus, tol);
    } else {
      if (csv_output) throw ParseError("truncation emits JSON only");
      std::vector<Index> sizes;
      for (const auto& text : split(trunc_sizes, ','))
        sizes.push_back(static_cast<Index>(parse_double(text, "sizes")));
      result = cmd_truncation(sizes, parse_tau(trunc_tau), band_margin, tol);
    }

    result.report["command"]["seed"] = seed;
    if (csv_output)
      write_output(result.csv, out_path);
    else
      write_output(result.report.dump(2), out_path);
    return result.ok ? kExitOk : kExitVerdictFailed;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerdictFailed;
  }
}
