#include "specfile.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "error.hpp"

namespace isop {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& message) {
  throw Error(ErrorCode::Validation, message);
}

void reject_unknown_keys(const json& obj, const std::string& where,
                         std::initializer_list<const char*> allowed) {
  for (const auto& [key, value] : obj.items()) {
    bool known = false;
    for (const char* a : allowed)
      if (key == a) {
        known = true;
        break;
      }
    if (!known) fail(where + ": unknown key \"" + key + "\"");
  }
}

double require_number(const json& obj, const std::string& where,
                      const char* key) {
  if (!obj.contains(key)) fail(where + "." + key + ": missing");
  const json& v = obj[key];
  if (!v.is_number()) fail(where + "." + key + ": must be a number");
  return v.get<double>();
}

int require_integer(const json& obj, const std::string& where,
                    const char* key) {
  if (!obj.contains(key)) fail(where + "." + key + ": missing");
  const json& v = obj[key];
  if (!v.is_number_integer())
    fail(where + "." + key + ": must be an integer");
  return v.get<int>();
}

FactorSpec parse_factor(const json& node, const std::string& where) {
  if (!node.is_object()) fail(where + ": must be an object");
  reject_unknown_keys(node, where, {"alphas", "lambda", "k"});

  FactorSpec factor;
  if (!node.contains("alphas") || !node["alphas"].is_array())
    fail(where + ".alphas: must be an array of numbers");
  for (const auto& a : node["alphas"]) {
    if (!a.is_number()) fail(where + ".alphas: must be an array of numbers");
    factor.alphas.push_back(a.get<double>());
  }
  factor.lambda = require_number(node, where, "lambda");
  factor.k = require_integer(node, where, "k");
  if (factor.k < 1) fail(where + ".k: must be an integer >= 1");
  return factor;
}

Options parse_options(const json& node) {
  if (!node.is_object()) fail("options: must be an object");
  reject_unknown_keys(node, "options",
                      {"eps_case", "h_rel", "seed", "points", "mode"});

  Options opt;
  if (node.contains("eps_case")) {
    opt.eps_case = require_number(node, "options", "eps_case");
    if (opt.eps_case < 0.0) fail("options.eps_case: must be >= 0");
  }
  if (node.contains("h_rel")) {
    opt.h_rel = require_number(node, "options", "h_rel");
    if (!(opt.h_rel > 0.0) || !(opt.h_rel < 0.5))
      fail("options.h_rel: must lie in (0, 0.5)");
  }
  if (node.contains("seed")) {
    if (!node["seed"].is_number_unsigned())
      fail("options.seed: must be a nonnegative integer");
    opt.seed = node["seed"].get<std::uint64_t>();
  }
  if (node.contains("points")) {
    opt.points = require_integer(node, "options", "points");
    if (opt.points < 0) fail("options.points: must be >= 0");
  }
  if (node.contains("mode")) {
    if (!node["mode"].is_string()) fail("options.mode: must be a string");
    const std::string mode = node["mode"].get<std::string>();
    if (mode == "paper-literal")
      opt.mode = Mode::PaperLiteral;
    else if (mode == "combined-multiplicity")
      opt.mode = Mode::CombinedMultiplicity;
    else
      fail("options.mode: must be \"paper-literal\" or "
           "\"combined-multiplicity\"");
  }
  return opt;
}

// Line/column of a byte offset, for parse diagnostics.
std::pair<std::size_t, std::size_t> anchor(const std::string& text,
                                           std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

} // namespace

SpecDocument parse_spec_document(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    const auto [line, column] = anchor(text, e.byte > 0 ? e.byte - 1 : 0);
    throw Error(ErrorCode::Parse, "line " + std::to_string(line) +
                                      ", column " + std::to_string(column) +
                                      ": " + e.what());
  }

  if (!doc.is_object()) fail("document: must be a JSON object");
  reject_unknown_keys(doc, "document", {"p", "n", "factors", "options"});

  SpecDocument out;
  out.problem.p = require_number(doc, "document", "p");
  out.problem.n = require_integer(doc, "document", "n");
  if (!doc.contains("factors") || !doc["factors"].is_array())
    fail("factors: must be a nonempty array");
  std::size_t idx = 0;
  for (const auto& node : doc["factors"]) {
    out.problem.factors.push_back(
        parse_factor(node, "factors[" + std::to_string(idx) + "]"));
    ++idx;
  }
  if (doc.contains("options")) out.options = parse_options(doc["options"]);

  out.problem.validate();
  return out;
}

SpecDocument load_spec_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error(ErrorCode::Io, "cannot read spec file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_spec_document(buffer.str());
}

} // namespace isop
