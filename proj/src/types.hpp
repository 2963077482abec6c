#ifndef ISOP_TYPES_HPP
#define ISOP_TYPES_HPP

#include <cstdint>
#include <vector>

namespace isop {

// One operator factor L_j: coordinate coefficients alpha_i, zero-order
// coefficient lambda, and the iteration count k (L_j is applied k times).
struct FactorSpec {
  std::vector<double> alphas;
  double lambda = 0.0;
  int k = 1;
};

// The full problem (prod_j L_j^{k_j}) u = 0 over r^p = sum x_i^p.
struct ProblemSpec {
  double p = 2.0;
  int n = 1;
  std::vector<FactorSpec> factors;

  int total_order() const {
    int sum = 0;
    for (const auto& f : factors) sum += f.k;
    return sum;
  }

  // Throws Error(Validation) with the offending field named.
  void validate() const;
};

enum class Mode {
  PaperLiteral,          // emit exactly the per-factor basis terms
  CombinedMultiplicity,  // merge shared roots across factors first
};

struct Options {
  double eps_case = 1e-9;
  // Coarser than the raw finite-difference default on purpose: the residual
  // thresholds sit near the central-difference roundoff floor eps/h^2, and
  // h_rel = 1e-4 balances that floor against the O(h^2) truncation error.
  double h_rel = 1e-4;
  std::uint64_t seed = 0;
  int points = 100;
  Mode mode = Mode::PaperLiteral;
};

} // namespace isop

#endif
