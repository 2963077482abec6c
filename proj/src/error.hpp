#ifndef ISOP_ERROR_HPP
#define ISOP_ERROR_HPP

#include <stdexcept>
#include <string>

namespace isop {

enum class ErrorCode {
  Argument,
  Parse,
  Validation,
  Domain,
  Capability,
  Io,
};

// Thrown by the core; the C boundary maps the code onto isop_status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message)
      : std::runtime_error(std::move(message)), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

} // namespace isop

#endif
