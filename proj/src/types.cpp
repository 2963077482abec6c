#include "types.hpp"

#include <cmath>
#include <string>

#include "error.hpp"

namespace isop {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw Error(ErrorCode::Validation, message);
}

} // namespace

void ProblemSpec::validate() const {
  require(std::isfinite(p) && p > 0.0, "p: must be a finite real > 0");
  require(n >= 1, "n: must be an integer >= 1");
  require(!factors.empty(), "factors: at least one factor is required");
  for (std::size_t j = 0; j < factors.size(); ++j) {
    const auto& f = factors[j];
    const std::string where = "factors[" + std::to_string(j) + "]";
    require(static_cast<int>(f.alphas.size()) == n,
            where + ".alphas: length must equal n (" + std::to_string(n) + ")");
    for (double a : f.alphas)
      require(std::isfinite(a), where + ".alphas: entries must be finite");
    require(std::isfinite(f.lambda), where + ".lambda: must be finite");
    require(f.k >= 1, where + ".k: must be an integer >= 1");
  }
}

} // namespace isop
