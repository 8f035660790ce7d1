#ifndef CSDECON_ERRORS_HPP
#define CSDECON_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace csdecon {

/// Dimension or parameter-range violation detected before any computation.
struct SizingError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Failure discovered during computation (non-convergence, singular
/// spectrum, NaN iterates). `step` names the stage that failed.
struct NumericalError : std::runtime_error {
  std::string step;
  NumericalError(std::string step_, const std::string &what_)
      : std::runtime_error(step_ + ": " + what_), step(std::move(step_)) {}
};

} // namespace csdecon

#endif
