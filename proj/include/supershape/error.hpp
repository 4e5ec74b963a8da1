#pragma once

#include <stdexcept>
#include <string>

namespace supershape {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A numeric argument is out of its legal domain (non-finite, wrong sign, ...).
class InvalidParameterError : public Error {
 public:
  using Error::Error;
};

/// An outline carries no usable geometry (e.g. all radii zero).
class DegenerateOutlineError : public Error {
 public:
  using Error::Error;
};

/// Two objects that must share dimensions do not.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Fewer than two training maps were supplied.
class InsufficientTrainingError : public Error {
 public:
  using Error::Error;
};

/// The training set has no spread (all maps identical: zero non-zero eigenvalues).
class DegenerateTrainingError : public Error {
 public:
  using Error::Error;
};

/// A weight vector whose mean is too small to score.
class DegenerateWeightsError : public Error {
 public:
  using Error::Error;
};

/// A referenced class or index does not exist.
class LookupError : public Error {
 public:
  using Error::Error;
};

/// A text file does not conform to its format; message carries the line number.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A file could not be opened, read, or written.
class IoError : public Error {
 public:
  using Error::Error;
};

/// Command-line or configuration values that cannot be combined.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace supershape
