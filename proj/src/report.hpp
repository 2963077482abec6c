#ifndef ISOP_REPORT_HPP
#define ISOP_REPORT_HPP

#include <string>
#include <vector>

#include "basis.hpp"
#include "numeric.hpp"
#include "verify.hpp"

namespace isop {

struct TermVerification {
  double symbolic_residual = 0.0; // scale-normalized
  bool symbolic_passed = false;
  double numeric_max_rel = 0.0;
  double numeric_mean_rel = 0.0;
  bool numeric_passed = true; // stays true when numeric is skipped
  bool passed = false;
};

struct VerificationReport {
  std::vector<TermVerification> terms;
  Options options; // the configuration the run used
  double symbolic_tol = kSymbolicTol;
  double numeric_tol = kNumericTol;
  bool numeric_skipped = false;
  double max_symbolic = 0.0;
  double max_numeric = 0.0;
  bool passed = true;
};

// Symbolic annihilation of every term, then the hybrid finite-difference
// check on options.points seeded sample points (skipped when 0).
VerificationReport run_verification(const ProblemSpec& spec,
                                    const SolutionBasis& basis,
                                    const Options& options);

std::string basis_to_json(const SolutionBasis& basis);
std::string verification_to_json(const VerificationReport& report,
                                 const SolutionBasis& basis);

} // namespace isop

#endif
