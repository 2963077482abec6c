// Acceptance gate: one line per criterion, nonzero exit when any fails.
// Tolerances are pinned here, independent of library defaults. Criterion 6
// spawns the CLI binary, whose path arrives as argv[1].

#include <sys/wait.h>
#include <unistd.h>

#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "basis.hpp"
#include "characteristic.hpp"
#include "numeric.hpp"
#include "verify.hpp"

using namespace isop;
using cx = std::complex<double>;

namespace {

int g_failures = 0;

void report(int criterion, bool passed, const std::string& detail) {
  std::printf("criterion %d: %s — %s\n", criterion, passed ? "PASS" : "FAIL",
              detail.c_str());
  if (!passed) ++g_failures;
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

// --- 1: eigen-action ------------------------------------------------------

void criterion1() {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> par(-5.0, 5.0);
  double worst_single = 0.0, worst_iterated = 0.0;
  bool ok = true;
  for (int trial = 0; trial < 200; ++trial) {
    const double phi = par(rng), lambda = par(rng), m = par(rng);
    const int k = 1 + static_cast<int>(rng() % 4);
    const cx b = beta(phi, lambda, m);

    auto expr = apply_factor_symbolic(phi, lambda,
                                      LogPowerExpr::monomial(1.0, m, 0));
    if (std::abs(b) > 1e-6) {
      const double rel = std::abs(expr.coeff_of(m, 0) - b) / std::abs(b);
      worst_single = std::max(worst_single, rel);
      if (rel > 1e-10) ok = false;
    }

    const cx bk = std::pow(b, k);
    if (std::abs(bk) > 1e-6) {
      for (int i = 1; i < k; ++i) expr = apply_factor_symbolic(phi, lambda, expr);
      const double rel = std::abs(expr.coeff_of(m, 0) - bk) / std::abs(bk);
      worst_iterated = std::max(worst_iterated, rel);
      if (rel > 1e-9) ok = false;
    }
  }
  report(1, ok,
         "eigen-action over 200 draws: max single-step error " +
             fmt(worst_single) + " (tol 1e-10), max iterated error " +
             fmt(worst_iterated) + " (tol 1e-9)");
}

// --- 2: randomized annihilation --------------------------------------------

void criterion2() {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> par(-5.0, 5.0);
  const double eps_case = 1e-9;
  double worst = 0.0;
  int specs_checked = 0, terms_checked = 0;
  bool ok = true;

  while (specs_checked < 100) {
    ProblemSpec spec;
    spec.n = 1 + static_cast<int>(rng() % 4);
    spec.p = 0.5 + 4.5 * (par(rng) + 5.0) / 10.0;
    const int q = 1 + static_cast<int>(rng() % 3);
    bool degenerate = false;
    for (int j = 0; j < q; ++j) {
      FactorSpec f;
      for (int i = 0; i < spec.n; ++i) f.alphas.push_back(par(rng));
      f.lambda = par(rng);
      f.k = 1 + static_cast<int>(rng() % 3);
      const auto a = analyze_factor(f, spec.p, spec.n, eps_case);
      const double band =
          eps_case * std::max({1.0, a.phi * a.phi, std::abs(f.lambda)});
      // Keep discriminants out of the ambiguous shoulder just above the
      // classification band.
      if (std::abs(a.disc) > band && std::abs(a.disc) < 10.0 * band)
        degenerate = true;
      spec.factors.push_back(f);
    }
    if (degenerate) continue;
    ++specs_checked;

    const auto basis = construct_solution_basis(spec, eps_case);
    for (const auto& result : symbolic_annihilation_check(spec, basis)) {
      ++terms_checked;
      worst = std::max(worst, result.normalized_residual);
      if (!result.passed || result.normalized_residual > 1e-9) ok = false;
    }
  }
  report(2, ok,
         "annihilation of " + std::to_string(terms_checked) + " terms from " +
             std::to_string(specs_checked) +
             " randomized specs: max normalized residual " + fmt(worst) +
             " (tol 1e-9)");
}

// --- 3: Laplace special case ------------------------------------------------

void criterion3() {
  bool ok = true;
  std::string detail;
  for (int n : {2, 3, 4}) {
    ProblemSpec spec;
    spec.p = 2.0;
    spec.n = n;
    spec.factors = {{std::vector<double>(n, 0.0), 0.0, 1}};
    const auto basis = construct_solution_basis(spec, 1e-9);

    bool shape_ok = basis.terms.size() == 2;
    if (shape_ok && n == 2) {
      // phi = 0 double root: {1, ln r}.
      shape_ok = basis.terms[0].kind == TermKind::PowerLog &&
                 basis.terms[0].exponent() == 0.0 &&
                 basis.terms[0].log_power == 0 &&
                 basis.terms[1].exponent() == 0.0 &&
                 basis.terms[1].log_power == 1;
    } else if (shape_ok) {
      shape_ok = std::abs(basis.terms[0].exponent()) <= 1e-12 &&
                 std::abs(basis.terms[1].exponent() - (2.0 - n)) <= 1e-12;
    }
    if (!shape_ok) ok = false;

    const auto points = sample_points(n, 100, 0);
    // h_rel pinned at the balance point of O(h^2) truncation against the
    // eps/h^2 roundoff floor of central differences.
    const auto residual = hybrid_residual_check(spec, basis, points,
                                                {1e-4, 2}, 1e-4);
    if (!residual.passed) ok = false;
    detail += (detail.empty() ? "n=" : ", n=") + std::to_string(n) +
              " max rel " + fmt(residual.max_rel);
  }
  report(3, ok, "Laplace exponents {0, 2-n} and " + detail + " (tol 1e-4)");
}

// --- 4: exact Euler cases -----------------------------------------------------

void criterion4() {
  bool ok = true;
  double worst_numeric = 0.0, worst_symbolic = 0.0;

  struct Case {
    double alpha, lambda;
    int k;
    std::vector<std::string> expected;
  };
  const std::vector<Case> cases = {
      {1.0, 0.0, 2, {"1", "ln x", "(ln x)^2", "(ln x)^3"}},
      {3.0, 1.0, 1, {"x^(-1.0)", "x^(-1.0) * ln x"}},
      {1.0, 4.0, 1, {"cos(2.0 ln x)", "sin(2.0 ln x)"}},
  };
  for (const auto& c : cases) {
    const auto basis = euler_solution_basis({c.alpha}, {c.lambda}, {c.k});
    std::vector<std::string> got;
    for (const auto& t : basis.terms) got.push_back(render_term(t, 1));
    if (got != c.expected) ok = false;

    for (const auto& result :
         symbolic_annihilation_check(basis.spec, basis)) {
      worst_symbolic = std::max(worst_symbolic, result.normalized_residual);
      if (!result.passed) ok = false;
    }

    const auto points = sample_points(1, 50, 0);
    const auto residual = hybrid_residual_check(basis.spec, basis, points,
                                                {1e-4, 2}, 1e-6);
    worst_numeric = std::max(worst_numeric, residual.max_rel);
    if (!residual.passed) ok = false;
  }
  report(4, ok,
         "three exact Euler bases: max symbolic residual " +
             fmt(worst_symbolic) + ", max numeric rel " + fmt(worst_numeric) +
             " (tol 1e-6) at 50 points");
}

// --- 5: second-order convergence ---------------------------------------------

void criterion5() {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> mdist(-3.0, 3.0);
  std::uniform_real_distribution<double> xdist(0.5, 2.0);
  int checked = 0;
  double lo = 1e9, hi = 0.0;
  bool ok = true;
  for (int trial = 0; trial < 200 && checked < 25; ++trial) {
    const double m = mdist(rng);
    const int n = 1 + static_cast<int>(rng() % 3);
    FactorSpec factor;
    for (int i = 0; i < n; ++i) factor.alphas.push_back(mdist(rng));
    factor.lambda = mdist(rng);
    std::vector<double> x;
    for (int i = 0; i < n; ++i) x.push_back(xdist(rng));

    const double p = 2.0;
    const double phi = compute_phi(factor, p, n);
    const double r = radial(x, p);
    const double exact = beta(phi, factor.lambda, m).real() * std::pow(r, m);
    auto f = [m, p](std::span<const double> pt) {
      return std::pow(radial(pt, p), m);
    };
    const double e1 =
        std::abs(apply_operator_numeric(factor, p, f, x, {1e-2, 2}) - exact);
    const double e2 =
        std::abs(apply_operator_numeric(factor, p, f, x, {5e-3, 2}) - exact);
    if (e1 < 1e-8 * (1.0 + std::abs(exact))) continue; // roundoff floor
    ++checked;
    const double ratio = e1 / e2;
    lo = std::min(lo, ratio);
    hi = std::max(hi, ratio);
    if (ratio < 3.5 || ratio > 4.5) ok = false;
  }
  if (checked < 15) ok = false;
  report(5, ok,
         "finite-difference halving ratios over " + std::to_string(checked) +
             " draws in [" + fmt(lo) + ", " + fmt(hi) + "] (band [3.5, 4.5])");
}

// --- 6: negative control through the CLI --------------------------------------

void criterion6(const char* cli) {
  // In-process: both oracles must flag r^5 against the Laplace factor.
  ProblemSpec spec;
  spec.p = 2.0;
  spec.n = 3;
  spec.factors = {{{0.0, 0.0, 0.0}, 0.0, 1}};
  auto basis = construct_solution_basis(spec, 1e-9);
  basis.terms.push_back({TermKind::PowerLog, 0.0, 5.0, 0, -1});

  const auto symbolic = annihilate_term(spec, basis.terms.back());
  const auto numeric = hybrid_residual_check(
      spec, basis, sample_points(3, 100, 0), {1e-4, 2}, 1e-4);
  bool ok = !symbolic.passed && !numeric.passed &&
            numeric.term_max_rel.back() > 0.1;

  // Through the CLI: exit code must be 1.
  int exit_code = -1;
  if (cli != nullptr) {
    const auto dir = std::filesystem::temp_directory_path();
    const auto file =
        dir / ("isop_acceptance_" + std::to_string(getpid()) + ".json");
    {
      std::ofstream out(file);
      out << R"({"p": 2, "n": 3,
                 "factors": [{"alphas": [0,0,0], "lambda": 0, "k": 1}]})";
    }
    const std::string cmd = std::string("'") + cli + "' verify --inject 5 '" +
                            file.string() + "' > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::error_code ec;
    std::filesystem::remove(file, ec);
    if (exit_code != 1) ok = false;
  } else {
    ok = false;
  }
  report(6, ok,
         "injected r^5: symbolic residual " + fmt(symbolic.normalized_residual) +
             ", numeric rel " + fmt(numeric.term_max_rel.back()) +
             ", CLI exit " + std::to_string(exit_code) + " (want 1)");
}

// --- 7: commutation ------------------------------------------------------------

void criterion7() {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> par(-5.0, 5.0);
  double worst = 0.0;
  bool ok = true;
  int exprs_checked = 0;

  while (exprs_checked < 50) {
    ProblemSpec spec;
    spec.n = 1 + static_cast<int>(rng() % 3);
    spec.p = 1.0 + (par(rng) + 5.0) / 5.0;
    for (int j = 0; j < 2; ++j) {
      FactorSpec f;
      for (int i = 0; i < spec.n; ++i) f.alphas.push_back(par(rng));
      f.lambda = par(rng);
      f.k = 1 + static_cast<int>(rng() % 2);
      spec.factors.push_back(f);
    }
    ProblemSpec swapped = spec;
    std::swap(swapped.factors[0], swapped.factors[1]);

    LogPowerExpr e;
    const int nterms = 1 + static_cast<int>(rng() % 3);
    for (int t = 0; t < nterms; ++t)
      e += LogPowerExpr::monomial(cx(par(rng), par(rng)), cx(par(rng), 0.0),
                                  static_cast<int>(rng() % 3));
    if (e.is_zero()) continue;
    ++exprs_checked;

    const auto ab = apply_iterated_symbolic(spec, e);
    const auto ba = apply_iterated_symbolic(swapped, e);
    const double scale = std::max(
        {1.0, ab.max_coeff_magnitude(), ba.max_coeff_magnitude()});
    if (ab.terms().size() != ba.terms().size()) {
      ok = false;
      continue;
    }
    for (std::size_t i = 0; i < ab.terms().size(); ++i) {
      const double diff =
          std::abs(ab.terms()[i].coeff - ba.terms()[i].coeff) / scale;
      worst = std::max(worst, diff);
      if (diff > 1e-10 || ab.terms()[i].log_power != ba.terms()[i].log_power ||
          std::abs(ab.terms()[i].exponent - ba.terms()[i].exponent) > 1e-12)
        ok = false;
    }
  }
  report(7, ok,
         "factor order irrelevant on 50 random expressions: max normalized "
         "difference " +
             fmt(worst) + " (tol 1e-10)");
}

} // namespace

int main(int argc, char** argv) {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6(argc > 1 ? argv[1] : nullptr);
  criterion7();
  if (g_failures == 0)
    std::printf("acceptance: all 7 criteria passed\n");
  else
    std::printf("acceptance: %d criterion(s) failed\n", g_failures);
  return g_failures == 0 ? 0 : 1;
}
