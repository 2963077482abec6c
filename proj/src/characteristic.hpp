#ifndef ISOP_CHARACTERISTIC_HPP
#define ISOP_CHARACTERISTIC_HPP

#include <complex>

#include "types.hpp"

namespace isop {

enum class CaseClass {
  RealDistinct, // I1: phi^2 - lambda > 0
  ComplexPair,  // I2: phi^2 - lambda < 0
  DoubleRoot,   // I3: phi^2 - lambda = 0 (within the classification band)
};

const char* case_label(CaseClass c); // "I1", "I2", "I3"

// 2*phi = -p + n(p-1) + sum_i alpha_i.
double compute_phi(const FactorSpec& factor, double p, int n);

// beta(m) = m(m + 2 phi) + lambda; the factor multiplies r^m by this.
std::complex<double> beta(double phi, double lambda, std::complex<double> m);

// beta'(m) = 2m + 2 phi (beta'' == 2, higher derivatives vanish).
std::complex<double> beta_prime(double phi, std::complex<double> m);

struct FactorAnalysis {
  double phi = 0.0;
  double disc = 0.0; // phi^2 - lambda
  CaseClass case_class = CaseClass::DoubleRoot;
  std::complex<double> root1; // -phi + sqrt(disc)
  std::complex<double> root2; // -phi - sqrt(disc)
};

// Classifies the factor with a scale-relative band: |disc| is compared
// against eps_case * max(1, phi^2, |lambda|). Roots always satisfy the
// Vieta relations (sum -2phi, product lambda) to machine accuracy.
FactorAnalysis analyze_factor(const FactorSpec& factor, double p, int n,
                              double eps_case);

} // namespace isop

#endif
