#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qring {

// Base class for everything the library throws.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidGridError : Error {
  using Error::Error;
};

struct DimensionError : Error {
  using Error::Error;
};

// Winding is undefined on states with a zero sample or a half-turn phase
// step between adjacent samples.
struct UndefinedWindingError : Error {
  using Error::Error;
};

struct InvalidSpecError : Error {
  using Error::Error;
};

// Gauge samples whose implied derivative is not periodic at the seam.
struct GaugeSampleError : Error {
  using Error::Error;
};

struct NotHermitianError : Error {
  using Error::Error;
};

struct ConvergenceError : Error {
  ConvergenceError(std::size_t eigen_index, const std::string& msg)
      : Error(msg), index(eigen_index) {}
  std::size_t index;
};

struct ClassificationError : Error {
  using Error::Error;
};

struct WavelengthUndefinedError : Error {
  using Error::Error;
};

struct InvalidConfigError : Error {
  using Error::Error;
};

// Malformed CLI input (gauge strings, coefficient lists, ranges).
struct UsageError : Error {
  using Error::Error;
};

}  // namespace qring
