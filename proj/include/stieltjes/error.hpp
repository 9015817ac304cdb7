#pragma once

#include <stdexcept>
#include <string>

namespace stieltjes {

/// Precondition or domain failure. `code()` is the stable machine-readable
/// name ("insufficient-moments", "alpha-singular", ...) that the CLI reports.
class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

private:
  std::string code_;
};

}  // namespace stieltjes
