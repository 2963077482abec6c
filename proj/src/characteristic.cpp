#include "characteristic.hpp"

#include <algorithm>
#include <cmath>

#include "error.hpp"

namespace isop {

const char* case_label(CaseClass c) {
  switch (c) {
    case CaseClass::RealDistinct: return "I1";
    case CaseClass::ComplexPair: return "I2";
    case CaseClass::DoubleRoot: return "I3";
  }
  return "?";
}

double compute_phi(const FactorSpec& factor, double p, int n) {
  if (static_cast<int>(factor.alphas.size()) != n) {
    throw Error(ErrorCode::Argument,
                "alpha vector has length " +
                    std::to_string(factor.alphas.size()) +
                    " but the dimension is " + std::to_string(n));
  }
  double alpha_sum = 0.0;
  for (double a : factor.alphas) alpha_sum += a;
  return (-p + n * (p - 1.0) + alpha_sum) / 2.0;
}

std::complex<double> beta(double phi, double lambda, std::complex<double> m) {
  return m * (m + 2.0 * phi) + lambda;
}

std::complex<double> beta_prime(double phi, std::complex<double> m) {
  return 2.0 * m + 2.0 * phi;
}

FactorAnalysis analyze_factor(const FactorSpec& factor, double p, int n,
                              double eps_case) {
  if (eps_case < 0.0)
    throw Error(ErrorCode::Argument, "eps_case must be nonnegative");

  FactorAnalysis out;
  out.phi = compute_phi(factor, p, n);
  out.disc = out.phi * out.phi - factor.lambda;

  const double band =
      eps_case * std::max({1.0, out.phi * out.phi, std::abs(factor.lambda)});
  if (out.disc > band)
    out.case_class = CaseClass::RealDistinct;
  else if (out.disc < -band)
    out.case_class = CaseClass::ComplexPair;
  else
    out.case_class = CaseClass::DoubleRoot;

  const std::complex<double> s =
      std::sqrt(std::complex<double>(out.disc, 0.0));
  out.root1 = -out.phi + s;
  out.root2 = -out.phi - s;

  // For well-separated real roots, -phi + sqrt(disc) cancels when
  // lambda ~ 0 and phi is large; recover the small root from the product.
  if (out.case_class == CaseClass::RealDistinct) {
    double r1 = out.root1.real();
    double r2 = out.root2.real();
    if (std::abs(r1) < std::abs(r2) && r2 != 0.0)
      r1 = factor.lambda / r2;
    else if (std::abs(r2) < std::abs(r1) && r1 != 0.0)
      r2 = factor.lambda / r1;
    if (r1 == 0.0) r1 = 0.0; // drop the sign of -0 from the division
    if (r2 == 0.0) r2 = 0.0;
    out.root1 = r1;
    out.root2 = r2;
  }
  return out;
}

} // namespace isop
