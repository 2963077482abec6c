#ifndef ISOP_VERIFY_HPP
#define ISOP_VERIFY_HPP

#include <vector>

#include "basis.hpp"

namespace isop {

// Pass threshold for the scale-normalized annihilation residual.
inline constexpr double kSymbolicTol = 1e-9;

// Outcome of pushing one basis term through the full iterated operator in
// the term algebra. `residual` holds the surviving expression with its raw
// coefficients. Coefficient growth along the way is tracked in `scale`
// (the peak coefficient magnitude seen, at least 1 for a unit input);
// `normalized_residual` = max surviving |coeff| / scale, which is the
// quantity compared against the tolerance. A foreign (non-annihilated)
// term lands near 1.
struct AnnihilationResult {
  LogPowerExpr residual;
  double max_coeff = 0.0;
  double scale = 1.0;
  double normalized_residual = 0.0;
  bool passed = false;
};

AnnihilationResult annihilate_term(const ProblemSpec& spec,
                                   const RealBasisTerm& term,
                                   double tol = kSymbolicTol);

// One result per basis term, in basis order.
std::vector<AnnihilationResult> symbolic_annihilation_check(
    const ProblemSpec& spec, const SolutionBasis& basis,
    double tol = kSymbolicTol);

} // namespace isop

#endif
