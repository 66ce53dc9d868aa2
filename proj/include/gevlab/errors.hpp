#ifndef GEVLAB_ERRORS_HPP
#define GEVLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gevlab {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Invalid argument to a numeric kernel (e.g. powScaled on a non-positive base).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Fewer fit samples than the regression requires.
class InsufficientDataError : public Error {
 public:
  using Error::Error;
};

// Mode truncation too aggressive for the requested power/derivative order.
class TruncationError : public Error {
 public:
  using Error::Error;
};

// Counterexample parameters violate the eigenvalue threshold or decay conditions.
class SpecError : public Error {
 public:
  using Error::Error;
};

// Vector support incompatible with a structural embedding.
class SupportError : public Error {
 public:
  using Error::Error;
};

// Time rescaling cannot normalize the damping coefficient (alpha = 1/2, c != 1).
class NormalizationError : public Error {
 public:
  using Error::Error;
};

// Adaptive quadrature exceeded its refinement depth budget.
class QuadratureError : public Error {
 public:
  using Error::Error;
};

// Experiment configuration failed schema/range validation.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace gevlab

#endif
