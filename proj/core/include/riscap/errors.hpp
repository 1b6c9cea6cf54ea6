#pragma once

#include <stdexcept>
#include <string>

namespace riscap {

// Thrown when a truncated or iterative numerical scheme cannot meet its
// accuracy target (contour tails, quadrature refinement, series limits).
class ConvergenceError : public std::runtime_error {
 public:
  explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace riscap
