#ifndef ISOP_BASIS_HPP
#define ISOP_BASIS_HPP

#include <string>
#include <vector>

#include "algebra.hpp"
#include "characteristic.hpp"
#include "types.hpp"

namespace isop {

enum class TermKind {
  PowerLog, // r^(-phi+mu) (ln r)^l
  CosLog,   // r^(-phi) cos(mu ln r) (ln r)^l
  SinLog,   // r^(-phi) sin(mu ln r) (ln r)^l
};

// One real-valued basis function. For PowerLog, mu is the signed offset
// +-sqrt(phi^2-lambda); for CosLog/SinLog it is the frequency
// sqrt(lambda-phi^2). factor_index is the 0-based producing factor, or -1
// for injected foreign terms.
struct RealBasisTerm {
  TermKind kind = TermKind::PowerLog;
  double phi = 0.0;
  double mu = 0.0;
  int log_power = 0;
  int factor_index = -1;

  double exponent() const {
    // The trailing + 0.0 turns -0 into +0 when phi == 0.
    return (kind == TermKind::PowerLog ? -phi + mu : -phi) + 0.0;
  }
};

struct SolutionBasis {
  std::vector<RealBasisTerm> terms;
  ProblemSpec spec;
  Mode mode = Mode::PaperLiteral;
};

// Real terms contributed by one factor: the +/- power pair for real
// distinct roots, the cos/sin pair for a conjugate pair (log powers
// 0..k-1 each), or the extended range 0..2k-1 for a double root.
std::vector<RealBasisTerm> realize_terms(const FactorAnalysis& analysis, int k,
                                         int factor_index);

// The full basis: 2 * sum_v k_v terms. In CombinedMultiplicity mode roots
// shared by several factors are merged first and their log ranges extended
// to the summed multiplicity; the term count is unchanged.
SolutionBasis construct_solution_basis(const ProblemSpec& spec,
                                       double eps_case,
                                       Mode mode = Mode::PaperLiteral);

// One-dimensional specialization x^2 u'' + alpha_v x u' + lambda_v u,
// iterated; equivalent to n = 1, p = 1. The three lists must have equal
// length.
SolutionBasis euler_solution_basis(const std::vector<double>& alphas,
                                   const std::vector<double>& lambdas,
                                   const std::vector<int>& ks);

// Complex-exponent form of a term: cos/sin terms become the conjugate
// half-sum / half-difference of r^(-phi +- i mu).
LogPowerExpr lift_term(const RealBasisTerm& term);

// Canonical text, e.g. "r^(-1.0) * (ln r)^2" or "cos(2.0 ln x)"; uses the
// variable x when n == 1. Numbers carry six significant digits.
std::string render_term(const RealBasisTerm& term, int n);

} // namespace isop

#endif
