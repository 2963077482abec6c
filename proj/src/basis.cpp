#include "basis.hpp"

#include <cmath>
#include <cstdio>
#include <utility>

#include "error.hpp"

namespace isop {

namespace {

std::string fmt_sig(double v) {
  if (v == 0.0) v = 0.0; // normalize -0
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  std::string s = buf;
  if (s.find_first_of(".e") == std::string::npos) s += ".0";
  return s;
}

} // namespace

std::vector<RealBasisTerm> realize_terms(const FactorAnalysis& analysis, int k,
                                         int factor_index) {
  if (k < 1) throw Error(ErrorCode::Argument, "iteration count must be >= 1");

  std::vector<RealBasisTerm> out;
  const double phi = analysis.phi;
  switch (analysis.case_class) {
    case CaseClass::RealDistinct: {
      const double mu_plus = analysis.root1.real() + phi;
      const double mu_minus = analysis.root2.real() + phi;
      for (int l = 0; l < k; ++l) {
        out.push_back({TermKind::PowerLog, phi, mu_plus, l, factor_index});
        out.push_back({TermKind::PowerLog, phi, mu_minus, l, factor_index});
      }
      break;
    }
    case CaseClass::ComplexPair: {
      const double omega = analysis.root1.imag();
      for (int l = 0; l < k; ++l) {
        out.push_back({TermKind::CosLog, phi, omega, l, factor_index});
        out.push_back({TermKind::SinLog, phi, omega, l, factor_index});
      }
      break;
    }
    case CaseClass::DoubleRoot: {
      for (int l = 0; l < 2 * k; ++l)
        out.push_back({TermKind::PowerLog, phi, 0.0, l, factor_index});
      break;
    }
  }
  return out;
}

namespace {

struct RootCluster {
  std::complex<double> exponent;
  double phi;        // of the first contributing factor
  double mu;         // exponent = -phi + mu for real clusters
  int multiplicity;  // sum of k_v * (root multiplicity within factor v)
  int factor_index;
  bool consumed = false;
};

void add_root(std::vector<RootCluster>& clusters, std::complex<double> expnt,
              double phi, double mu, int weight, int factor_index) {
  for (auto& c : clusters) {
    if (std::abs(c.exponent.real() - expnt.real()) <= kExponentMergeTol &&
        std::abs(c.exponent.imag() - expnt.imag()) <= kExponentMergeTol) {
      c.multiplicity += weight;
      return;
    }
  }
  clusters.push_back({expnt, phi, mu, weight, factor_index});
}

std::vector<RealBasisTerm> combined_multiplicity_terms(
    const std::vector<FactorAnalysis>& analyses, const ProblemSpec& spec) {
  std::vector<RootCluster> clusters;
  for (std::size_t v = 0; v < analyses.size(); ++v) {
    const auto& a = analyses[v];
    const int k = spec.factors[v].k;
    const int iv = static_cast<int>(v);
    if (a.case_class == CaseClass::DoubleRoot) {
      add_root(clusters, std::complex<double>(-a.phi, 0.0), a.phi, 0.0, 2 * k,
               iv);
    } else {
      add_root(clusters, a.root1, a.phi, a.root1.real() + a.phi, k, iv);
      add_root(clusters, a.root2, a.phi, a.root2.real() + a.phi, k, iv);
    }
  }

  std::vector<RealBasisTerm> out;
  for (auto& c : clusters) {
    if (c.consumed) continue;
    if (std::abs(c.exponent.imag()) <= kExponentMergeTol) {
      for (int l = 0; l < c.multiplicity; ++l)
        out.push_back({TermKind::PowerLog, c.phi, c.mu, l, c.factor_index});
    } else {
      // Conjugate pairs are inserted together; mark the mirror consumed.
      for (auto& other : clusters) {
        if (&other != &c &&
            std::abs(other.exponent.real() - c.exponent.real()) <=
                kExponentMergeTol &&
            std::abs(other.exponent.imag() + c.exponent.imag()) <=
                kExponentMergeTol) {
          other.consumed = true;
          break;
        }
      }
      const double phi = -c.exponent.real();
      const double omega = std::abs(c.exponent.imag());
      for (int l = 0; l < c.multiplicity; ++l) {
        out.push_back({TermKind::CosLog, phi, omega, l, c.factor_index});
        out.push_back({TermKind::SinLog, phi, omega, l, c.factor_index});
      }
    }
  }
  return out;
}

} // namespace

SolutionBasis construct_solution_basis(const ProblemSpec& spec,
                                       double eps_case, Mode mode) {
  spec.validate();

  std::vector<FactorAnalysis> analyses;
  analyses.reserve(spec.factors.size());
  for (const auto& f : spec.factors)
    analyses.push_back(analyze_factor(f, spec.p, spec.n, eps_case));

  SolutionBasis basis;
  basis.spec = spec;
  basis.mode = mode;
  if (mode == Mode::PaperLiteral) {
    for (std::size_t v = 0; v < analyses.size(); ++v) {
      auto terms =
          realize_terms(analyses[v], spec.factors[v].k, static_cast<int>(v));
      basis.terms.insert(basis.terms.end(), terms.begin(), terms.end());
    }
  } else {
    basis.terms = combined_multiplicity_terms(analyses, spec);
  }
  return basis;
}

SolutionBasis euler_solution_basis(const std::vector<double>& alphas,
                                   const std::vector<double>& lambdas,
                                   const std::vector<int>& ks) {
  if (alphas.size() != lambdas.size() || alphas.size() != ks.size())
    throw Error(ErrorCode::Argument,
                "alphas, lambdas and ks must have equal length");
  if (alphas.empty())
    throw Error(ErrorCode::Argument, "at least one factor is required");

  ProblemSpec spec;
  spec.p = 1.0;
  spec.n = 1;
  for (std::size_t v = 0; v < alphas.size(); ++v)
    spec.factors.push_back({{alphas[v]}, lambdas[v], ks[v]});
  return construct_solution_basis(spec, Options{}.eps_case);
}

LogPowerExpr lift_term(const RealBasisTerm& term) {
  const int l = term.log_power;
  switch (term.kind) {
    case TermKind::PowerLog:
      return LogPowerExpr::monomial(1.0, term.exponent(), l);
    case TermKind::CosLog:
      return LogPowerExpr::from_terms(
          {{{0.5, 0.0}, {-term.phi, term.mu}, l},
           {{0.5, 0.0}, {-term.phi, -term.mu}, l}});
    case TermKind::SinLog:
      return LogPowerExpr::from_terms(
          {{{0.0, -0.5}, {-term.phi, term.mu}, l},
           {{0.0, 0.5}, {-term.phi, -term.mu}, l}});
  }
  return {};
}

std::string render_term(const RealBasisTerm& term, int n) {
  const std::string var = n == 1 ? "x" : "r";
  std::string out;
  auto append = [&out](const std::string& piece) {
    if (!out.empty()) out += " * ";
    out += piece;
  };

  const double e =
      term.kind == TermKind::PowerLog ? term.exponent() : -term.phi;
  if (e != 0.0) append(var + "^(" + fmt_sig(e) + ")");
  if (term.kind == TermKind::CosLog)
    append("cos(" + fmt_sig(term.mu) + " ln " + var + ")");
  else if (term.kind == TermKind::SinLog)
    append("sin(" + fmt_sig(term.mu) + " ln " + var + ")");
  if (term.log_power == 1)
    append("ln " + var);
  else if (term.log_power >= 2)
    append("(ln " + var + ")^" + std::to_string(term.log_power));
  if (out.empty()) out = "1";
  return out;
}

} // namespace isop
