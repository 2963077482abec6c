#include "isop.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <span>
#include <string>
#include <vector>

#include "basis.hpp"
#include "characteristic.hpp"
#include "error.hpp"
#include "numeric.hpp"
#include "report.hpp"
#include "specfile.hpp"
#include "types.hpp"

struct isop_problem {
  isop::ProblemSpec spec;
  isop::Options options;
};

struct isop_basis {
  isop::SolutionBasis basis;
  std::vector<std::string> texts;
};

struct isop_report {
  isop::VerificationReport report;
  std::string json;
};

namespace {

thread_local std::string g_last_error = "";

isop_status status_of(isop::ErrorCode code) {
  switch (code) {
    case isop::ErrorCode::Argument: return ISOP_ERR_ARGUMENT;
    case isop::ErrorCode::Parse: return ISOP_ERR_PARSE;
    case isop::ErrorCode::Validation: return ISOP_ERR_VALIDATION;
    case isop::ErrorCode::Domain: return ISOP_ERR_DOMAIN;
    case isop::ErrorCode::Capability: return ISOP_ERR_CAPABILITY;
    case isop::ErrorCode::Io: return ISOP_ERR_IO;
  }
  return ISOP_ERR_ARGUMENT;
}

template <typename Fn>
isop_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const isop::Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return ISOP_ERR_ARGUMENT;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return ISOP_ERR_ARGUMENT;
  }
}

isop_status arg_error(const char* message) {
  g_last_error = message;
  return ISOP_ERR_ARGUMENT;
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::string render_text(const isop::RealBasisTerm& term, int n) {
  return isop::render_term(term, n);
}

} // namespace

extern "C" {

const char* isop_version(void) { return "0.1.0"; }

const char* isop_last_error(void) { return g_last_error.c_str(); }

void isop_string_free(char* s) { std::free(s); }

/* ---- problem ----------------------------------------------------------- */

isop_status isop_problem_from_string(const char* text, isop_problem** out) {
  if (!text || !out) return arg_error("null argument");
  *out = nullptr;
  return guarded([&]() {
    auto doc = isop::parse_spec_document(text);
    *out = new isop_problem{std::move(doc.problem), doc.options};
    return ISOP_OK;
  });
}

isop_status isop_problem_from_file(const char* path, isop_problem** out) {
  if (!path || !out) return arg_error("null argument");
  *out = nullptr;
  return guarded([&]() {
    auto doc = isop::load_spec_document(path);
    *out = new isop_problem{std::move(doc.problem), doc.options};
    return ISOP_OK;
  });
}

void isop_problem_free(isop_problem* p) { delete p; }

double isop_problem_p(const isop_problem* p) { return p ? p->spec.p : 0.0; }

int isop_problem_n(const isop_problem* p) { return p ? p->spec.n : 0; }

size_t isop_problem_factor_count(const isop_problem* p) {
  return p ? p->spec.factors.size() : 0;
}

isop_status isop_problem_factor(const isop_problem* p, size_t j,
                                isop_factor_info* out) {
  if (!p || !out) return arg_error("null argument");
  if (j >= p->spec.factors.size()) return arg_error("factor index out of range");
  const auto& f = p->spec.factors[j];
  out->alpha_count = f.alphas.size();
  out->lambda = f.lambda;
  out->k = f.k;
  return ISOP_OK;
}

isop_status isop_problem_factor_alpha(const isop_problem* p, size_t j,
                                      size_t i, double* out) {
  if (!p || !out) return arg_error("null argument");
  if (j >= p->spec.factors.size()) return arg_error("factor index out of range");
  const auto& alphas = p->spec.factors[j].alphas;
  if (i >= alphas.size()) return arg_error("alpha index out of range");
  *out = alphas[i];
  return ISOP_OK;
}

isop_status isop_problem_analyze(const isop_problem* p, size_t j,
                                 isop_factor_analysis* out) {
  if (!p || !out) return arg_error("null argument");
  if (j >= p->spec.factors.size()) return arg_error("factor index out of range");
  return guarded([&]() {
    const auto a = isop::analyze_factor(p->spec.factors[j], p->spec.p,
                                        p->spec.n, p->options.eps_case);
    out->phi = a.phi;
    out->disc = a.disc;
    switch (a.case_class) {
      case isop::CaseClass::RealDistinct:
        out->case_class = ISOP_CASE_I1_REAL_DISTINCT;
        break;
      case isop::CaseClass::ComplexPair:
        out->case_class = ISOP_CASE_I2_COMPLEX_PAIR;
        break;
      case isop::CaseClass::DoubleRoot:
        out->case_class = ISOP_CASE_I3_DOUBLE_ROOT;
        break;
    }
    out->root1_re = a.root1.real();
    out->root1_im = a.root1.imag();
    out->root2_re = a.root2.real();
    out->root2_im = a.root2.imag();
    return ISOP_OK;
  });
}

uint64_t isop_problem_seed(const isop_problem* p) {
  return p ? p->options.seed : 0;
}

int isop_problem_points(const isop_problem* p) {
  return p ? p->options.points : 0;
}

double isop_problem_h_rel(const isop_problem* p) {
  return p ? p->options.h_rel : 0.0;
}

double isop_problem_eps_case(const isop_problem* p) {
  return p ? p->options.eps_case : 0.0;
}

int isop_problem_mode(const isop_problem* p) {
  if (!p) return ISOP_MODE_PAPER_LITERAL;
  return p->options.mode == isop::Mode::PaperLiteral
             ? ISOP_MODE_PAPER_LITERAL
             : ISOP_MODE_COMBINED_MULTIPLICITY;
}

void isop_problem_set_seed(isop_problem* p, uint64_t seed) {
  if (p) p->options.seed = seed;
}

isop_status isop_problem_set_points(isop_problem* p, int points) {
  if (!p) return arg_error("null argument");
  if (points < 0) return arg_error("points must be >= 0");
  p->options.points = points;
  return ISOP_OK;
}

isop_status isop_problem_set_h_rel(isop_problem* p, double h_rel) {
  if (!p) return arg_error("null argument");
  if (!(h_rel > 0.0) || !(h_rel < 0.5))
    return arg_error("h_rel must lie in (0, 0.5)");
  p->options.h_rel = h_rel;
  return ISOP_OK;
}

isop_status isop_problem_set_mode(isop_problem* p, int mode) {
  if (!p) return arg_error("null argument");
  if (mode == ISOP_MODE_PAPER_LITERAL)
    p->options.mode = isop::Mode::PaperLiteral;
  else if (mode == ISOP_MODE_COMBINED_MULTIPLICITY)
    p->options.mode = isop::Mode::CombinedMultiplicity;
  else
    return arg_error("unknown mode");
  return ISOP_OK;
}

/* ---- basis ------------------------------------------------------------- */

isop_status isop_basis_build(const isop_problem* p, isop_basis** out) {
  if (!p || !out) return arg_error("null argument");
  *out = nullptr;
  return guarded([&]() {
    auto basis = isop::construct_solution_basis(p->spec, p->options.eps_case,
                                                p->options.mode);
    auto handle = std::make_unique<isop_basis>();
    handle->texts.reserve(basis.terms.size());
    for (const auto& term : basis.terms)
      handle->texts.push_back(render_text(term, basis.spec.n));
    handle->basis = std::move(basis);
    *out = handle.release();
    return ISOP_OK;
  });
}

void isop_basis_free(isop_basis* b) { delete b; }

size_t isop_basis_size(const isop_basis* b) {
  return b ? b->basis.terms.size() : 0;
}

isop_status isop_basis_term(const isop_basis* b, size_t i,
                            isop_term_info* out) {
  if (!b || !out) return arg_error("null argument");
  if (i >= b->basis.terms.size()) return arg_error("term index out of range");
  const auto& t = b->basis.terms[i];
  switch (t.kind) {
    case isop::TermKind::PowerLog: out->kind = ISOP_TERM_POWER_LOG; break;
    case isop::TermKind::CosLog: out->kind = ISOP_TERM_COS_LOG; break;
    case isop::TermKind::SinLog: out->kind = ISOP_TERM_SIN_LOG; break;
  }
  out->phi = t.phi;
  out->mu = t.mu;
  out->exponent = t.exponent();
  out->log_power = t.log_power;
  out->factor = t.factor_index + 1;
  return ISOP_OK;
}

const char* isop_basis_term_text(const isop_basis* b, size_t i) {
  if (!b || i >= b->texts.size()) return nullptr;
  return b->texts[i].c_str();
}

isop_status isop_basis_inject_power(isop_basis* b, double exponent,
                                    int log_power) {
  if (!b) return arg_error("null argument");
  if (log_power < 0) return arg_error("log_power must be >= 0");
  isop::RealBasisTerm term{isop::TermKind::PowerLog, 0.0, exponent, log_power,
                           -1};
  b->basis.terms.push_back(term);
  b->texts.push_back(render_text(term, b->basis.spec.n));
  return ISOP_OK;
}

isop_status isop_basis_eval(const isop_basis* b, const double* coeffs,
                            size_t n_coeffs, const double* point,
                            size_t n_point, double* out) {
  if (!b || !point || !out) return arg_error("null argument");
  if (coeffs && n_coeffs != b->basis.terms.size())
    return arg_error("coefficient count does not match the basis size");
  if (n_point != static_cast<size_t>(b->basis.spec.n))
    return arg_error("point dimension does not match the problem");
  return guarded([&]() {
    std::span<const double> x(point, n_point);
    double sum = 0.0;
    for (size_t i = 0; i < b->basis.terms.size(); ++i) {
      const double c = coeffs ? coeffs[i] : 1.0;
      if (c != 0.0)
        sum += c * isop::eval_basis_term(b->basis.terms[i], x, b->basis.spec.p);
    }
    *out = sum;
    return ISOP_OK;
  });
}

isop_status isop_basis_to_json(const isop_basis* b, char** out) {
  if (!b || !out) return arg_error("null argument");
  return guarded([&]() {
    *out = copy_string(isop::basis_to_json(b->basis));
    return *out ? ISOP_OK : arg_error("out of memory");
  });
}

/* ---- verification ------------------------------------------------------ */

isop_status isop_verify(const isop_problem* p, const isop_basis* b,
                        isop_report** out) {
  if (!p || !b || !out) return arg_error("null argument");
  *out = nullptr;
  return guarded([&]() {
    auto report = isop::run_verification(p->spec, b->basis, p->options);
    auto handle = std::make_unique<isop_report>();
    handle->json = isop::verification_to_json(report, b->basis);
    handle->report = std::move(report);
    *out = handle.release();
    return ISOP_OK;
  });
}

void isop_report_free(isop_report* r) { delete r; }

int isop_report_passed(const isop_report* r) {
  return r && r->report.passed ? 1 : 0;
}

int isop_report_numeric_skipped(const isop_report* r) {
  return r && r->report.numeric_skipped ? 1 : 0;
}

size_t isop_report_term_count(const isop_report* r) {
  return r ? r->report.terms.size() : 0;
}

isop_status isop_report_term(const isop_report* r, size_t i,
                             isop_term_report* out) {
  if (!r || !out) return arg_error("null argument");
  if (i >= r->report.terms.size()) return arg_error("term index out of range");
  const auto& t = r->report.terms[i];
  out->symbolic_residual = t.symbolic_residual;
  out->symbolic_passed = t.symbolic_passed ? 1 : 0;
  out->numeric_max_rel = t.numeric_max_rel;
  out->numeric_mean_rel = t.numeric_mean_rel;
  out->numeric_passed = t.numeric_passed ? 1 : 0;
  out->passed = t.passed ? 1 : 0;
  return ISOP_OK;
}

isop_status isop_report_to_json(const isop_report* r, char** out) {
  if (!r || !out) return arg_error("null argument");
  *out = copy_string(r->json);
  return *out ? ISOP_OK : arg_error("out of memory");
}

} // extern "C"
