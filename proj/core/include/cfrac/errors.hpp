#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cfrac {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class AlgebraMismatch : public Error {
 public:
  using Error::Error;
};

class BackendMismatch : public Error {
 public:
  using Error::Error;
};

class UnsupportedBackend : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class UnknownName : public Error {
 public:
  using Error::Error;
};

class InvalidConfiguration : public Error {
 public:
  using Error::Error;
};

// Raised by the Koranyi inversion on points with v = 0.
class PointAtInfinity : public Error {
 public:
  using Error::Error;
};

// gauss_step was asked to continue from x = 0.
class Terminated : public Error {
 public:
  using Error::Error;
};

// A Gauss step found no digit (or more than one) for a point of K.
class DomainError : public Error {
 public:
  DomainError(const std::string& what, std::size_t step = 0)
      : Error(what), step_(step) {}

  std::size_t step() const { return step_; }

 private:
  std::size_t step_;
};

// A nested fold hit a zero denominator; `suffix` is the 1-based index i of
// the offending suffix a_i, ..., a_n.
class ZeroDenominator : public Error {
 public:
  ZeroDenominator(const std::string& what, std::size_t suffix)
      : Error(what), suffix_(suffix) {}

  std::size_t suffix() const { return suffix_; }

 private:
  std::size_t suffix_;
};

}  // namespace cfrac
