#pragma once

#include <stdexcept>
#include <string>

namespace theodorus {

// All library failures derive from Error so callers can catch one type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A requested index lies beyond the built angle table.
class RangeExhausted : public Error {
 public:
  using Error::Error;
};

// Exact integer arithmetic would leave the 64-bit range.
class Overflow : public Error {
 public:
  using Error::Error;
};

class InvalidPolynomial : public Error {
 public:
  using Error::Error;
};

class TooShort : public Error {
 public:
  using Error::Error;
};

// fit_quadratic failures
class NotHalfInteger : public Error {
 public:
  using Error::Error;
};

class Inconsistent : public Error {
 public:
  using Error::Error;
};

class NotQuadratic : public Error {
 public:
  using Error::Error;
};

class TooFew : public Error {
 public:
  using Error::Error;
};

class UnknownDivisor : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace theodorus
