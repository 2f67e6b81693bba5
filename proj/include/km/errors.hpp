#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace km {

// Domain error with a stable machine-readable code ("NotAffine", "HeightOverflow", ...).
// The CLI maps these to exit code 1 and a structured JSON error object.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& msg)
      : std::runtime_error(code + ": " + msg), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

[[noreturn]] inline void fail(std::string code, const std::string& msg) {
  throw Error(std::move(code), msg);
}

}  // namespace km
