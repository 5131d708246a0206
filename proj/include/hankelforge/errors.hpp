#pragma once

#include <stdexcept>
#include <string>

namespace hankelforge {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Inverting a series whose constant term vanishes.
class ZeroConstantTerm : public Error {
 public:
  using Error::Error;
};

// A quadratic functional equation outside the solvable class
// (needs v(0) = 0 and u(0) != 0 for a unique power-series solution).
class BadEquation : public Error {
 public:
  using Error::Error;
};

// A coefficient past the known truncation order was requested.
class TruncationExceeded : public Error {
 public:
  using Error::Error;
};

// Valuation of a series that is zero up to its truncation order:
// indistinguishable from the zero series.
class IndeterminateValuation : public Error {
 public:
  using Error::Error;
};

// A quadratic that cannot be rewritten as F = x^d / (u + x^k v F).
class NotCanonicalizable : public Error {
 public:
  using Error::Error;
};

// Unrecognized closed-form determinant identifier.
class UnknownFamilyId : public Error {
 public:
  using Error::Error;
};

// Malformed coefficient-list / rational-function spec; carries the
// character position of the offending token.
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t position)
      : Error(msg + " (position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace hankelforge
