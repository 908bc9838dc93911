#pragma once

#include <stdexcept>
#include <string>

namespace cforge {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotHermitian : Error {
  using Error::Error;
};

struct NotPsd : Error {
  explicit NotPsd(std::size_t effect_index, double eigenvalue)
      : Error("effect " + std::to_string(effect_index) + " is not PSD (min eigenvalue " +
              std::to_string(eigenvalue) + ")"),
        index(effect_index),
        min_eigenvalue(eigenvalue) {}
  explicit NotPsd(double eigenvalue)
      : Error("matrix is not PSD (min eigenvalue " + std::to_string(eigenvalue) + ")"),
        index(0),
        min_eigenvalue(eigenvalue) {}
  std::size_t index;
  double min_eigenvalue;
};

struct NotComplete : Error {
  explicit NotComplete(double deviation)
      : Error("effects do not sum to identity (max deviation " + std::to_string(deviation) +
              ")"),
        max_deviation(deviation) {}
  double max_deviation;
};

struct DimMismatch : Error {
  using Error::Error;
};

struct WrongDimension : Error {
  using Error::Error;
};

struct OutsideBlochBall : Error {
  using Error::Error;
};

struct SupportMismatch : Error {
  using Error::Error;
};

struct ZeroProbabilityOutcome : Error {
  using Error::Error;
};

struct InvalidParams : Error {
  using Error::Error;
};

struct DegenerateDirection : Error {
  using Error::Error;
};

struct SingularNormalizer : Error {
  using Error::Error;
};

struct NonPositiveValue : Error {
  using Error::Error;
};

struct ConfigError : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

struct IoError : Error {
  using Error::Error;
};

}  // namespace cforge
