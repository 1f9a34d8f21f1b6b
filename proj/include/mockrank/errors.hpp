#pragma once

#include <stdexcept>
#include <string>

namespace mockrank {

// Certification failures: a computed quantity failed a hard internal check
// (rounding residual, exact-divisibility, uniqueness of a coset, ...).
// These signal either an insufficient precision policy or a logic bug,
// never a recoverable condition.
class certification_error : public std::runtime_error {
 public:
  explicit certification_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace mockrank
