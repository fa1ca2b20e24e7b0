#pragma once

#include <stdexcept>
#include <string>

namespace fraclog {

enum class ErrorKind {
  domain,
  pole,
  overflow,
  no_convergence,
  bracket_failure,
  convergence_domain,
  degenerate_model,
  divergence,
  validation,
  io,
};

const char* to_string(ErrorKind kind) noexcept;

/// Single exception type for the library; `kind()` lets callers (and the CLI
/// exit-status logic) distinguish failure classes without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace fraclog
