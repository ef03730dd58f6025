#pragma once

#include <stdexcept>
#include <string>

namespace hartogs {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Mismatched dimensions between lattice/domain values.
struct DimensionError : Error {
  using Error::Error;
};

// A domain-level invariant is violated (bad radii, non-containment, ...).
struct ValidationError : Error {
  using Error::Error;
};

// The input falls outside the closed decision tables of the engine.
struct UnsupportedError : Error {
  using Error::Error;
};

}  // namespace hartogs
