#include "numeric.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "error.hpp"

namespace isop {

namespace {

constexpr double kNormalizerFloor = 1e-30;

void require_positive(std::span<const double> x) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0.0) || !std::isfinite(x[i]))
      throw Error(ErrorCode::Domain,
                  "coordinate " + std::to_string(i + 1) + " (" +
                      std::to_string(x[i]) +
                      ") is outside the open positive orthant");
  }
}

double ipow(double base, int exp) {
  double out = 1.0;
  for (int i = 0; i < exp; ++i) out *= base;
  return out;
}

} // namespace

double radial(std::span<const double> x, double p) {
  if (x.empty()) throw Error(ErrorCode::Argument, "point has no coordinates");
  if (!(p > 0.0)) throw Error(ErrorCode::Argument, "p must be > 0");
  require_positive(x);
  double sum = 0.0;
  for (double xi : x) sum += std::pow(xi, p);
  return std::pow(sum, 1.0 / p);
}

double eval_basis_term(const RealBasisTerm& term, std::span<const double> x,
                       double p) {
  const double r = radial(x, p);
  const double lnr = std::log(r);
  switch (term.kind) {
    case TermKind::PowerLog:
      return std::pow(r, term.exponent()) * ipow(lnr, term.log_power);
    case TermKind::CosLog:
      return std::pow(r, -term.phi) * std::cos(term.mu * lnr) *
             ipow(lnr, term.log_power);
    case TermKind::SinLog:
      return std::pow(r, -term.phi) * std::sin(term.mu * lnr) *
             ipow(lnr, term.log_power);
  }
  return 0.0;
}

double eval_expr(const LogPowerExpr& expr, double r) {
  if (!(r > 0.0)) throw Error(ErrorCode::Domain, "radius must be positive");
  const double lnr = std::log(r);
  std::complex<double> sum = 0.0;
  for (const auto& t : expr.terms())
    sum += t.coeff * std::exp(t.exponent * lnr) * ipow(lnr, t.log_power);
  return sum.real();
}

OperatorApplication apply_operator_numeric_detailed(const FactorSpec& factor,
                                                    double p,
                                                    const PointFunction& f,
                                                    std::span<const double> x,
                                                    const FDConfig& cfg) {
  require_positive(x);
  if (factor.alphas.size() != x.size())
    throw Error(ErrorCode::Argument,
                "point dimension does not match the factor's alpha vector");
  if (!(cfg.h_rel > 0.0))
    throw Error(ErrorCode::Argument, "h_rel must be > 0");

  const double r = radial(x, p);
  const double f0 = f(x);

  OperatorApplication out;
  out.normalizer = kNormalizerFloor;
  double sum = 0.0;
  std::vector<double> shifted(x.begin(), x.end());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double h = cfg.h_rel * x[i];
    if (!(x[i] - 2.0 * h > 0.0))
      throw Error(ErrorCode::Domain,
                  "difference step at coordinate " + std::to_string(i + 1) +
                      " would leave the positive orthant");
    shifted[i] = x[i] + h;
    const double fp = f(shifted);
    shifted[i] = x[i] - h;
    const double fm = f(shifted);
    shifted[i] = x[i];

    const double d1 = (fp - fm) / (2.0 * h);
    const double d2 = (fp - 2.0 * f0 + fm) / (h * h);
    const double scale = std::pow(r / x[i], p);
    const double second = scale * x[i] * x[i] * d2;
    const double first = scale * factor.alphas[i] * x[i] * d1;
    sum += second + first;
    // Normalize against the individual derivative pieces, not their sum:
    // for Euler-type terms the pieces cancel exactly and the sum says
    // nothing about the operator's working scale.
    out.normalizer =
        std::max({out.normalizer, std::abs(second), std::abs(first)});
  }
  const double zero_order = factor.lambda * f0;
  out.normalizer = std::max(out.normalizer, std::abs(zero_order));
  out.value = sum + zero_order;
  return out;
}

double apply_operator_numeric(const FactorSpec& factor, double p,
                              const PointFunction& f,
                              std::span<const double> x, const FDConfig& cfg) {
  return apply_operator_numeric_detailed(factor, p, f, x, cfg).value;
}

double apply_iterated_numeric(const ProblemSpec& spec, const PointFunction& f,
                              std::span<const double> x, const FDConfig& cfg) {
  spec.validate();
  const int order = spec.total_order();
  if (order > cfg.max_numeric_order)
    throw Error(ErrorCode::Capability,
                "total operator order " + std::to_string(order) +
                    " exceeds max_numeric_order " +
                    std::to_string(cfg.max_numeric_order) +
                    "; use the hybrid residual check for deep products");

  PointFunction level = f;
  for (const auto& factor : spec.factors) {
    for (int i = 0; i < factor.k; ++i) {
      PointFunction inner = level;
      const double p = spec.p;
      level = [factor, p, inner, cfg](std::span<const double> pt) {
        return apply_operator_numeric(factor, p, inner, pt, cfg);
      };
    }
  }
  return level(x);
}

std::vector<Point> sample_points(int n, int count, std::uint64_t seed,
                                 double lo, double hi) {
  if (n < 1) throw Error(ErrorCode::Argument, "dimension must be >= 1");
  if (count < 0) throw Error(ErrorCode::Argument, "point count must be >= 0");
  std::mt19937_64 rng(seed);
  // Map engine output to [0,1) by hand; the engine sequence is portable,
  // std::uniform_real_distribution is not.
  auto unit = [&rng]() {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
  };
  std::vector<Point> pts(static_cast<std::size_t>(count));
  for (auto& pt : pts) {
    pt.resize(static_cast<std::size_t>(n));
    for (auto& c : pt) c = lo + (hi - lo) * unit();
  }
  return pts;
}

ResidualReport hybrid_residual_check(const ProblemSpec& spec,
                                     const SolutionBasis& basis,
                                     const std::vector<Point>& points,
                                     const FDConfig& cfg, double threshold) {
  spec.validate();
  ResidualReport report;
  report.threshold = threshold;
  report.points_used = points.size();
  report.term_max_rel.assign(basis.terms.size(), 0.0);
  report.term_mean_rel.assign(basis.terms.size(), 0.0);

  const FactorSpec& last = spec.factors.back();
  double sum_rel = 0.0;
  for (std::size_t ti = 0; ti < basis.terms.size(); ++ti) {
    // All factors except one application of the last one, done exactly.
    LogPowerExpr expr = lift_term(basis.terms[ti]);
    for (std::size_t j = 0; j < spec.factors.size(); ++j) {
      const auto& factor = spec.factors[j];
      const double phi = compute_phi(factor, spec.p, spec.n);
      const int reps = j + 1 == spec.factors.size() ? factor.k - 1 : factor.k;
      for (int i = 0; i < reps; ++i)
        expr = apply_factor_symbolic(phi, factor.lambda, expr);
    }

    const double p = spec.p;
    PointFunction f = [&expr, p](std::span<const double> pt) {
      return eval_expr(expr, radial(pt, p));
    };

    double term_sum = 0.0;
    for (std::size_t pi = 0; pi < points.size(); ++pi) {
      const auto app =
          apply_operator_numeric_detailed(last, p, f, points[pi], cfg);
      const double rel = std::abs(app.value) / app.normalizer;
      report.samples.push_back({ti, pi, app.value, app.normalizer, rel});
      report.term_max_rel[ti] = std::max(report.term_max_rel[ti], rel);
      term_sum += rel;
      sum_rel += rel;
      if (rel > threshold) report.passed = false;
      report.max_rel = std::max(report.max_rel, rel);
    }
    if (!points.empty())
      report.term_mean_rel[ti] = term_sum / static_cast<double>(points.size());
  }
  if (!report.samples.empty())
    report.mean_rel = sum_rel / static_cast<double>(report.samples.size());
  return report;
}

} // namespace isop
