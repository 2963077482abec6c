#include "algebra.hpp"

#include <algorithm>
#include <cmath>

#include "characteristic.hpp"

namespace isop {

namespace {

bool exponents_match(std::complex<double> a, std::complex<double> b) {
  return std::abs(a.real() - b.real()) <= kExponentMergeTol &&
         std::abs(a.imag() - b.imag()) <= kExponentMergeTol;
}

bool term_key_less(const LogPowerTerm& a, const LogPowerTerm& b) {
  if (a.exponent.real() != b.exponent.real())
    return a.exponent.real() < b.exponent.real();
  if (a.exponent.imag() != b.exponent.imag())
    return a.exponent.imag() < b.exponent.imag();
  return a.log_power < b.log_power;
}

} // namespace

LogPowerExpr LogPowerExpr::monomial(std::complex<double> coeff,
                                    std::complex<double> exponent,
                                    int log_power) {
  LogPowerExpr e;
  if (coeff != std::complex<double>(0.0, 0.0) && log_power >= 0)
    e.terms_.push_back({coeff, exponent, log_power});
  return e;
}

LogPowerExpr LogPowerExpr::from_terms(std::vector<LogPowerTerm> terms) {
  LogPowerExpr e;
  e.terms_ = std::move(terms);
  e.normalize();
  return e;
}

double LogPowerExpr::max_coeff_magnitude() const {
  double m = 0.0;
  for (const auto& t : terms_) m = std::max(m, std::abs(t.coeff));
  return m;
}

LogPowerExpr& LogPowerExpr::operator+=(const LogPowerExpr& other) {
  terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
  normalize();
  return *this;
}

LogPowerExpr LogPowerExpr::scaled(std::complex<double> factor) const {
  LogPowerExpr out;
  if (factor == std::complex<double>(0.0, 0.0)) return out;
  out.terms_ = terms_;
  for (auto& t : out.terms_) t.coeff *= factor;
  out.normalize();
  return out;
}

void LogPowerExpr::normalize() {
  if (terms_.empty()) return;
  std::sort(terms_.begin(), terms_.end(), term_key_less);

  std::vector<LogPowerTerm> merged;
  merged.reserve(terms_.size());
  for (const auto& t : terms_) {
    if (!merged.empty() && merged.back().log_power == t.log_power &&
        exponents_match(merged.back().exponent, t.exponent)) {
      merged.back().coeff += t.coeff;
    } else {
      merged.push_back(t);
    }
  }

  double peak = 0.0;
  for (const auto& t : merged) peak = std::max(peak, std::abs(t.coeff));
  const double cutoff = kCoeffPruneRel * peak;

  terms_.clear();
  for (const auto& t : merged)
    if (std::abs(t.coeff) > cutoff) terms_.push_back(t);
}

std::complex<double> LogPowerExpr::coeff_of(std::complex<double> exponent,
                                            int log_power) const {
  for (const auto& t : terms_)
    if (t.log_power == log_power && exponents_match(t.exponent, exponent))
      return t.coeff;
  return {0.0, 0.0};
}

LogPowerExpr apply_factor_symbolic(double phi, double lambda,
                                   const LogPowerExpr& expr) {
  std::vector<LogPowerTerm> produced;
  produced.reserve(expr.terms().size() * 3);
  for (const auto& t : expr.terms()) {
    const int l = t.log_power;
    produced.push_back({t.coeff * beta(phi, lambda, t.exponent), t.exponent, l});
    if (l >= 1)
      produced.push_back({t.coeff * static_cast<double>(l) *
                              beta_prime(phi, t.exponent),
                          t.exponent, l - 1});
    if (l >= 2)
      produced.push_back(
          {t.coeff * static_cast<double>(l) * static_cast<double>(l - 1),
           t.exponent, l - 2});
  }
  return LogPowerExpr::from_terms(std::move(produced));
}

LogPowerExpr apply_iterated_symbolic(const ProblemSpec& spec,
                                     const LogPowerExpr& expr) {
  LogPowerExpr current = expr;
  for (const auto& factor : spec.factors) {
    const double phi = compute_phi(factor, spec.p, spec.n);
    for (int i = 0; i < factor.k; ++i)
      current = apply_factor_symbolic(phi, factor.lambda, current);
  }
  return current;
}

} // namespace isop
