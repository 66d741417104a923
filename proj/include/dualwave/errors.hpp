#pragma once

#include <stdexcept>
#include <string>

namespace dualwave {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Evaluation requested at a point where f or g diverges (z = 0 for n < 0 or log form).
struct SingularPoint : Error {
  using Error::Error;
};

// Angle outside the declared branch window.
struct BranchViolation : Error {
  using Error::Error;
};

// A finite-difference stencil does not fit inside the valid domain.
struct StencilOutOfDomain : Error {
  using Error::Error;
};

// V - E is not strictly negative where log|V - E| is required.
struct SignViolation : Error {
  using Error::Error;
};

struct OutOfDomain : Error {
  using Error::Error;
};

struct NegativeIndexSquared : Error {
  using Error::Error;
};

struct EmptyGrid : Error {
  using Error::Error;
};

struct ConfigError : Error {
  using Error::Error;
};

}  // namespace dualwave
