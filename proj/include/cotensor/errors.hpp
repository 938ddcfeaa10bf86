#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cotensor {

/// Base of every library error. Well-posed "no" answers are reported through
/// return values; exceptions signal violated preconditions or internal faults.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// factor_through was asked to lift a column outside the image of the map.
class NotInImage : public Error {
 public:
  using Error::Error;
};

class CoalgebraMismatch : public Error {
 public:
  using Error::Error;
};

class NotCoalgebraMap : public Error {
 public:
  using Error::Error;
};

class NotBicomoduleMap : public Error {
 public:
  using Error::Error;
};

class NotSubcoalgebra : public Error {
 public:
  using Error::Error;
};

/// A structural identity that holds by theorem failed to hold; this points at
/// a bug in the construction rather than at the input.
class InternalCheckFailed : public Error {
 public:
  using Error::Error;
};

class NicholsViolated : public Error {
 public:
  using Error::Error;
};

class TruncationTooSmall : public Error {
 public:
  TruncationTooSmall(const std::string& what, int minimal_trunc)
      : Error(what), minimal_trunc_(minimal_trunc) {}
  /// Smallest truncation level at which the requested map exists.
  int minimal_trunc() const noexcept { return minimal_trunc_; }

 private:
  int minimal_trunc_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace cotensor
