#include "report.hpp"

#include <algorithm>

#include "json.hpp"

namespace isop {

VerificationReport run_verification(const ProblemSpec& spec,
                                    const SolutionBasis& basis,
                                    const Options& options) {
  VerificationReport report;
  report.options = options;
  report.terms.resize(basis.terms.size());

  const auto symbolic = symbolic_annihilation_check(spec, basis, kSymbolicTol);
  for (std::size_t i = 0; i < symbolic.size(); ++i) {
    report.terms[i].symbolic_residual = symbolic[i].normalized_residual;
    report.terms[i].symbolic_passed = symbolic[i].passed;
    report.max_symbolic =
        std::max(report.max_symbolic, symbolic[i].normalized_residual);
  }

  report.numeric_skipped = options.points == 0;
  if (!report.numeric_skipped) {
    const auto points = sample_points(spec.n, options.points, options.seed);
    FDConfig cfg;
    cfg.h_rel = options.h_rel;
    const auto numeric =
        hybrid_residual_check(spec, basis, points, cfg, kNumericTol);
    for (std::size_t i = 0; i < basis.terms.size(); ++i) {
      report.terms[i].numeric_max_rel = numeric.term_max_rel[i];
      report.terms[i].numeric_mean_rel = numeric.term_mean_rel[i];
      report.terms[i].numeric_passed =
          numeric.term_max_rel[i] <= report.numeric_tol;
      report.max_numeric = std::max(report.max_numeric, numeric.term_max_rel[i]);
    }
  }

  for (auto& term : report.terms) {
    term.passed = term.symbolic_passed && term.numeric_passed;
    if (!term.passed) report.passed = false;
  }
  return report;
}

namespace {

using ordered_json = nlohmann::ordered_json;

const char* mode_name(Mode mode) {
  return mode == Mode::PaperLiteral ? "paper-literal"
                                    : "combined-multiplicity";
}

const char* kind_name(TermKind kind) {
  switch (kind) {
    case TermKind::PowerLog: return "power_log";
    case TermKind::CosLog: return "cos_log";
    case TermKind::SinLog: return "sin_log";
  }
  return "?";
}

ordered_json term_to_json(const RealBasisTerm& term, std::size_t index,
                          int n) {
  ordered_json node;
  node["index"] = index;
  node["kind"] = kind_name(term.kind);
  node["factor"] = term.factor_index + 1; // 1-based; 0 marks injected terms
  node["phi"] = term.phi;
  if (term.kind == TermKind::PowerLog)
    node["mu"] = term.mu;
  else
    node["frequency"] = term.mu;
  node["exponent"] = term.exponent();
  node["log_power"] = term.log_power;
  node["text"] = render_term(term, n);
  return node;
}

} // namespace

std::string basis_to_json(const SolutionBasis& basis) {
  ordered_json doc;
  doc["schema"] = "isop.basis/1";
  doc["p"] = basis.spec.p;
  doc["n"] = basis.spec.n;
  doc["variable"] = basis.spec.n == 1 ? "x" : "r";
  doc["mode"] = mode_name(basis.mode);
  doc["count"] = basis.terms.size();
  doc["terms"] = ordered_json::array();
  for (std::size_t i = 0; i < basis.terms.size(); ++i)
    doc["terms"].push_back(term_to_json(basis.terms[i], i, basis.spec.n));
  return doc.dump(2);
}

std::string verification_to_json(const VerificationReport& report,
                                 const SolutionBasis& basis) {
  ordered_json doc;
  doc["schema"] = "isop.verify/1";
  doc["mode"] = mode_name(report.options.mode);
  doc["seed"] = report.options.seed;
  doc["points"] = report.options.points;
  doc["h_rel"] = report.options.h_rel;
  doc["symbolic_tolerance"] = report.symbolic_tol;
  doc["numeric_tolerance"] = report.numeric_tol;
  doc["numeric_skipped"] = report.numeric_skipped;
  doc["terms"] = ordered_json::array();
  for (std::size_t i = 0; i < report.terms.size(); ++i) {
    const auto& t = report.terms[i];
    ordered_json node;
    node["index"] = i;
    node["text"] = render_term(basis.terms[i], basis.spec.n);
    node["symbolic_residual"] = t.symbolic_residual;
    node["symbolic_passed"] = t.symbolic_passed;
    if (!report.numeric_skipped) {
      node["numeric_max_rel"] = t.numeric_max_rel;
      node["numeric_mean_rel"] = t.numeric_mean_rel;
      node["numeric_passed"] = t.numeric_passed;
    }
    node["passed"] = t.passed;
    doc["terms"].push_back(node);
  }
  doc["max_symbolic_residual"] = report.max_symbolic;
  if (!report.numeric_skipped) doc["max_numeric_rel"] = report.max_numeric;
  doc["passed"] = report.passed;
  return doc.dump(2);
}

} // namespace isop
