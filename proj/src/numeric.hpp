#ifndef ISOP_NUMERIC_HPP
#define ISOP_NUMERIC_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "basis.hpp"
#include "types.hpp"

namespace isop {

// Pass threshold for hybrid finite-difference relative residuals.
inline constexpr double kNumericTol = 1e-4;

using Point = std::vector<double>;
using PointFunction = std::function<double(std::span<const double>)>;

// Central second-order differences with per-coordinate step h_i = h_rel*x_i.
// Nested whole-operator applications are capped at max_numeric_order; deeper
// products go through the hybrid check instead.
struct FDConfig {
  double h_rel = 1e-5;
  int max_numeric_order = 2;
};

// r = (sum_i x_i^p)^(1/p); requires every coordinate strictly positive.
double radial(std::span<const double> x, double p);

double eval_basis_term(const RealBasisTerm& term, std::span<const double> x,
                       double p);

// Real part of sum_t c_t r^{m_t} (ln r)^{l_t} at radius r > 0.
double eval_expr(const LogPowerExpr& expr, double r);

struct OperatorApplication {
  double value = 0.0;
  // Largest individual |piece| of the operator at the point (per-coordinate
  // second- and first-derivative terms plus lambda*f), floored at 1e-30;
  // the scale residuals are measured against.
  double normalizer = 1e-30;
};

// One finite-difference application of a factor to an arbitrary function.
OperatorApplication apply_operator_numeric_detailed(const FactorSpec& factor,
                                                    double p,
                                                    const PointFunction& f,
                                                    std::span<const double> x,
                                                    const FDConfig& cfg);
double apply_operator_numeric(const FactorSpec& factor, double p,
                              const PointFunction& f,
                              std::span<const double> x, const FDConfig& cfg);

// Nested application of every factor k_j times, in factor order. Throws
// Error(Capability) when sum_j k_j exceeds cfg.max_numeric_order.
double apply_iterated_numeric(const ProblemSpec& spec, const PointFunction& f,
                              std::span<const double> x, const FDConfig& cfg);

// Reproducible cloud of `count` points uniform in [lo, hi]^n.
std::vector<Point> sample_points(int n, int count, std::uint64_t seed,
                                 double lo = 0.5, double hi = 2.0);

struct ResidualSample {
  std::size_t term_index = 0;
  std::size_t point_index = 0;
  double residual = 0.0;
  double normalizer = 1e-30;
  double relative = 0.0;
};

struct ResidualReport {
  std::vector<ResidualSample> samples; // term-major
  std::vector<double> term_max_rel;    // one entry per basis term
  std::vector<double> term_mean_rel;
  double max_rel = 0.0;
  double mean_rel = 0.0;
  double threshold = kNumericTol;
  std::size_t points_used = 0;
  bool passed = true; // vacuously true with no points
};

// For each term, applies all factors but one symbolically (exact), then the
// final factor by finite differences, so numeric differentiation depth stays
// at one operator regardless of the total order.
ResidualReport hybrid_residual_check(const ProblemSpec& spec,
                                     const SolutionBasis& basis,
                                     const std::vector<Point>& points,
                                     const FDConfig& cfg,
                                     double threshold = kNumericTol);

} // namespace isop

#endif
