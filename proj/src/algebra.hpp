#ifndef ISOP_ALGEBRA_HPP
#define ISOP_ALGEBRA_HPP

#include <complex>
#include <vector>

#include "types.hpp"

namespace isop {

// Exponents are identified when both parts agree to this absolute tolerance.
inline constexpr double kExponentMergeTol = 1e-12;
// Coefficients below this fraction of the largest coefficient are dropped.
inline constexpr double kCoeffPruneRel = 1e-14;

// One monomial c * r^m (ln r)^l with complex coefficient and exponent.
struct LogPowerTerm {
  std::complex<double> coeff;
  std::complex<double> exponent;
  int log_power = 0;
};

// A finite sum of log-power monomials. The operator family acts on this
// space in closed form, so equality-to-zero here is an exact statement up
// to floating-point rounding. Kept normalized: terms sorted by
// (Re m, Im m, l), at most one term per key, negligible coefficients
// pruned. The zero expression has no terms.
class LogPowerExpr {
 public:
  LogPowerExpr() = default;

  static LogPowerExpr monomial(std::complex<double> coeff,
                               std::complex<double> exponent, int log_power);
  static LogPowerExpr from_terms(std::vector<LogPowerTerm> terms);

  const std::vector<LogPowerTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  double max_coeff_magnitude() const;

  LogPowerExpr& operator+=(const LogPowerExpr& other);
  friend LogPowerExpr operator+(LogPowerExpr a, const LogPowerExpr& b) {
    a += b;
    return a;
  }
  LogPowerExpr scaled(std::complex<double> factor) const;

  // Merges equal (exponent, log_power) keys and prunes small coefficients.
  void normalize();

  // Coefficient of the term matching (exponent, log_power), zero if absent.
  std::complex<double> coeff_of(std::complex<double> exponent,
                                int log_power) const;

 private:
  std::vector<LogPowerTerm> terms_;
};

// Exact image of expr under one factor with characteristic shift phi and
// zero-order coefficient lambda. Termwise:
//   L(r^m (ln r)^l) = beta(m) r^m (ln r)^l
//                   + l beta'(m) r^m (ln r)^{l-1}
//                   + l(l-1) r^m (ln r)^{l-2}
// (beta is quadratic, so the expansion stops there).
LogPowerExpr apply_factor_symbolic(double phi, double lambda,
                                   const LogPowerExpr& expr);

// Applies every factor of the problem k_j times, in list order. On a pure
// power r^m the result is (prod_j beta_j^{k_j}(m)) r^m.
LogPowerExpr apply_iterated_symbolic(const ProblemSpec& spec,
                                     const LogPowerExpr& expr);

} // namespace isop

#endif
