#include "verify.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

namespace isop {

AnnihilationResult annihilate_term(const ProblemSpec& spec,
                                   const RealBasisTerm& term, double tol) {
  AnnihilationResult result;
  LogPowerExpr expr = lift_term(term);

  // The factors commute on the term algebra, so the application order is
  // free. Order matters numerically, though: once a factor has annihilated
  // the term, only rounding noise is left, and any factor applied after
  // that amplifies pure noise without growing the recorded peak. Applying
  // factors in descending |beta(m)| puts the annihilating factors last,
  // where their cancellation noise stays un-amplified.
  const std::complex<double> m =
      expr.terms().empty() ? std::complex<double>(0.0) : expr.terms()[0].exponent;
  struct Application {
    double phi;
    double lambda;
    int k;
    double magnitude;
  };
  std::vector<Application> order;
  order.reserve(spec.factors.size());
  for (const auto& factor : spec.factors) {
    const double phi = compute_phi(factor, spec.p, spec.n);
    order.push_back(
        {phi, factor.lambda, factor.k, std::abs(beta(phi, factor.lambda, m))});
  }
  std::stable_sort(order.begin(), order.end(),
                   [](const Application& a, const Application& b) {
                     return a.magnitude > b.magnitude;
                   });

  result.scale = std::max(1.0, expr.max_coeff_magnitude());
  for (const auto& app : order) {
    for (int i = 0; i < app.k; ++i) {
      expr = apply_factor_symbolic(app.phi, app.lambda, expr);
      result.scale = std::max(result.scale, expr.max_coeff_magnitude());
    }
  }
  result.residual = expr;
  result.max_coeff = expr.max_coeff_magnitude();
  result.normalized_residual = result.max_coeff / result.scale;
  result.passed = result.normalized_residual <= tol;
  return result;
}

std::vector<AnnihilationResult> symbolic_annihilation_check(
    const ProblemSpec& spec, const SolutionBasis& basis, double tol) {
  std::vector<AnnihilationResult> results;
  results.reserve(basis.terms.size());
  for (const auto& term : basis.terms)
    results.push_back(annihilate_term(spec, term, tol));
  return results;
}

} // namespace isop
