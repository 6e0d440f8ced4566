#pragma once

#include <stdexcept>
#include <string>

namespace szego_lab {

// Iterative procedure (Newton inversion, segment quadrature) failed to settle.
class NonConvergence : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Least-squares system too ill-conditioned for the requested route.
class IllConditioned : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two independent evaluation routes of the same quantity disagree.
class ConsistencyFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Exponents handed to an inequality check violate its Hölder relation.
class ExponentMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed experiment configuration (file or flags).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace szego_lab
