// isop command line front end. Talks to the library exclusively through the
// public C API so it doubles as a smoke test for the shared object.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "isop.h"

namespace {

[[noreturn]] void fail_input() {
  std::fprintf(stderr, "isop: %s\n", isop_last_error());
  std::exit(2);
}

void check(isop_status st) {
  if (st != ISOP_OK) fail_input();
}

struct ProblemDeleter {
  void operator()(isop_problem* p) const { isop_problem_free(p); }
};
struct BasisDeleter {
  void operator()(isop_basis* b) const { isop_basis_free(b); }
};
struct ReportDeleter {
  void operator()(isop_report* r) const { isop_report_free(r); }
};
using ProblemPtr = std::unique_ptr<isop_problem, ProblemDeleter>;
using BasisPtr = std::unique_ptr<isop_basis, BasisDeleter>;
using ReportPtr = std::unique_ptr<isop_report, ReportDeleter>;

ProblemPtr load_problem(const std::string& path) {
  isop_problem* raw = nullptr;
  check(isop_problem_from_file(path.c_str(), &raw));
  return ProblemPtr(raw);
}

BasisPtr build_basis(const isop_problem* p) {
  isop_basis* raw = nullptr;
  check(isop_basis_build(p, &raw));
  return BasisPtr(raw);
}

std::string num6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

const char* case_name(int c) {
  switch (c) {
    case ISOP_CASE_I1_REAL_DISTINCT: return "I1 (real distinct roots)";
    case ISOP_CASE_I2_COMPLEX_PAIR: return "I2 (complex conjugate pair)";
    case ISOP_CASE_I3_DOUBLE_ROOT: return "I3 (double root)";
  }
  return "?";
}

std::string root_text(double re, double im) {
  if (im == 0.0) return num6(re);
  std::string s = num6(re);
  s += im < 0 ? " - " : " + ";
  s += num6(std::abs(im));
  s += "i";
  return s;
}

int cmd_roots(const std::string& path) {
  ProblemPtr p = load_problem(path);
  const size_t q = isop_problem_factor_count(p.get());
  std::printf("p = %s, n = %d, %zu factor%s\n", num6(isop_problem_p(p.get())).c_str(),
              isop_problem_n(p.get()), q, q == 1 ? "" : "s");
  for (size_t j = 0; j < q; ++j) {
    isop_factor_info info{};
    check(isop_problem_factor(p.get(), j, &info));
    isop_factor_analysis a{};
    check(isop_problem_analyze(p.get(), j, &a));
    std::printf("factor %zu (k = %d): phi = %s, lambda = %s, disc = %s, case %s\n",
                j + 1, info.k, num6(a.phi).c_str(), num6(info.lambda).c_str(),
                num6(a.disc).c_str(), case_name(a.case_class));
    std::printf("  m1 = %s\n", root_text(a.root1_re, a.root1_im).c_str());
    std::printf("  m2 = %s\n", root_text(a.root2_re, a.root2_im).c_str());
  }
  return 0;
}

int cmd_solve(const std::string& path, bool as_json) {
  ProblemPtr p = load_problem(path);
  BasisPtr b = build_basis(p.get());
  if (as_json) {
    char* text = nullptr;
    check(isop_basis_to_json(b.get(), &text));
    std::printf("%s\n", text);
    isop_string_free(text);
    return 0;
  }
  const size_t count = isop_basis_size(b.get());
  const bool combined =
      isop_problem_mode(p.get()) == ISOP_MODE_COMBINED_MULTIPLICITY;
  std::printf("basis (%zu term%s, %s):\n", count, count == 1 ? "" : "s",
              combined ? "combined-multiplicity" : "paper-literal");
  for (size_t i = 0; i < count; ++i)
    std::printf("  u_%zu = %s\n", i + 1, isop_basis_term_text(b.get(), i));
  return 0;
}

struct VerifyArgs {
  std::string path;
  int points = -1;
  uint64_t seed = 0;
  bool seed_set = false;
  double h_rel = 0.0;
  std::string mode;
  std::string inject;
  bool as_json = false;
};

int cmd_verify(const VerifyArgs& args) {
  ProblemPtr p = load_problem(args.path);
  if (args.points >= 0) check(isop_problem_set_points(p.get(), args.points));
  if (args.seed_set) isop_problem_set_seed(p.get(), args.seed);
  if (args.h_rel > 0.0) check(isop_problem_set_h_rel(p.get(), args.h_rel));
  if (!args.mode.empty()) {
    const int mode = args.mode == "combined" ? ISOP_MODE_COMBINED_MULTIPLICITY
                                             : ISOP_MODE_PAPER_LITERAL;
    check(isop_problem_set_mode(p.get(), mode));
  }
  BasisPtr b = build_basis(p.get());
  if (!args.inject.empty()) {
    double exponent = 0.0;
    int log_power = 0;
    char trailing = 0;
    const int got = std::sscanf(args.inject.c_str(), "%lf,%d%c", &exponent,
                                &log_power, &trailing);
    if (got != 2) {
      log_power = 0;
      if (std::sscanf(args.inject.c_str(), "%lf%c", &exponent, &trailing) != 1) {
        std::fprintf(stderr, "isop: --inject expects EXPONENT or EXPONENT,LOGPOWER\n");
        return 2;
      }
    }
    check(isop_basis_inject_power(b.get(), exponent, log_power));
  }
  isop_report* raw = nullptr;
  check(isop_verify(p.get(), b.get(), &raw));
  ReportPtr r(raw);

  if (args.as_json) {
    char* text = nullptr;
    check(isop_report_to_json(r.get(), &text));
    std::printf("%s\n", text);
    isop_string_free(text);
  } else {
    const bool numeric_skipped = isop_report_numeric_skipped(r.get()) != 0;
    const size_t count = isop_report_term_count(r.get());
    for (size_t i = 0; i < count; ++i) {
      isop_term_report t{};
      check(isop_report_term(r.get(), i, &t));
      std::string numeric = numeric_skipped
                                ? std::string("num -")
                                : "num " + num6(t.numeric_max_rel);
      std::printf("[%2zu] %s  sym %s  %s  %s\n", i + 1,
                  t.passed ? "ok  " : "FAIL", num6(t.symbolic_residual).c_str(),
                  numeric.c_str(), isop_basis_term_text(b.get(), i));
    }
    std::printf("verification: %s (%zu term%s%s)\n",
                isop_report_passed(r.get()) ? "PASS" : "FAIL", count,
                count == 1 ? "" : "s",
                numeric_skipped ? ", numeric stage skipped" : "");
  }
  return isop_report_passed(r.get()) ? 0 : 1;
}

int cmd_eval(const std::string& path, const std::vector<double>& at,
             const std::vector<double>& coeffs) {
  ProblemPtr p = load_problem(path);
  BasisPtr b = build_basis(p.get());
  double value = 0.0;
  check(isop_basis_eval(b.get(), coeffs.empty() ? nullptr : coeffs.data(),
                        coeffs.size(), at.data(), at.size(), &value));
  std::printf("%.17g\n", value);
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"radial log-power solution bases for iterated singular operators"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(isop_version()));

  std::string path;

  auto* roots = app.add_subcommand("roots", "characteristic roots per factor");
  roots->add_option("file", path, "problem file")->required();

  bool solve_json = false;
  auto* solve = app.add_subcommand("solve", "print the solution basis");
  solve->add_option("file", path, "problem file")->required();
  solve->add_flag("--json", solve_json, "machine-readable output");

  VerifyArgs vargs;
  auto* verify = app.add_subcommand("verify", "check every basis term");
  verify->add_option("file", vargs.path, "problem file")->required();
  verify->add_option("--points", vargs.points, "sample points (0 = symbolic only)")
      ->check(CLI::NonNegativeNumber);
  auto* seed_opt = verify->add_option("--seed", vargs.seed, "sampling seed");
  verify->add_option("--h-rel", vargs.h_rel, "relative finite-difference step")
      ->check(CLI::PositiveNumber);
  verify->add_option("--mode", vargs.mode, "basis construction mode")
      ->check(CLI::IsMember({"paper", "combined"}));
  verify->add_option("--inject", vargs.inject,
                     "append a foreign term EXPONENT[,LOGPOWER] (negative control)");
  verify->add_flag("--json", vargs.as_json, "machine-readable report");

  std::vector<double> at;
  std::vector<double> coeffs;
  auto* eval = app.add_subcommand("eval", "evaluate a combination of basis terms");
  eval->add_option("file", path, "problem file")->required();
  eval->add_option("--at", at, "evaluation point x1,...,xn")
      ->required()
      ->delimiter(',');
  eval->add_option("--coeffs", coeffs, "term coefficients (default: all ones)")
      ->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  vargs.seed_set = seed_opt->count() > 0;

  if (roots->parsed()) return cmd_roots(path);
  if (solve->parsed()) return cmd_solve(path, solve_json);
  if (verify->parsed()) return cmd_verify(vargs);
  if (eval->parsed()) return cmd_eval(path, at, coeffs);
  return 2;
}
