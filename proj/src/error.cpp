#include "fraclog/error.hpp"

namespace fraclog {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::domain: return "domain error";
    case ErrorKind::pole: return "pole error";
    case ErrorKind::overflow: return "overflow error";
    case ErrorKind::no_convergence: return "no-convergence error";
    case ErrorKind::bracket_failure: return "bracket-failure error";
    case ErrorKind::convergence_domain: return "convergence-domain error";
    case ErrorKind::degenerate_model: return "degenerate-model error";
    case ErrorKind::divergence: return "divergence error";
    case ErrorKind::validation: return "validation error";
    case ErrorKind::io: return "io error";
  }
  return "error";
}

}  // namespace fraclog
