#pragma once

#include <stdexcept>
#include <string>

namespace howe {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad arguments: sizes, guards, malformed weights. CLI exit code 2.
struct PreconditionError : Error {
  using Error::Error;
};

// Singular points, poles, Cayley singularities. CLI exit code 3.
struct NumericalDomainError : Error {
  using Error::Error;
};

}  // namespace howe
