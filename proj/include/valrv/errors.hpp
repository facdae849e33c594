#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace valrv {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or mismatched field / residue / lattice specifications.
class SpecError : public Error {
 public:
  using Error::Error;
};

// An operation's precondition does not hold for its inputs.
class DomainError : public Error {
 public:
  using Error::Error;
};

// The element is zero at its tracked precision; only a lower bound on the
// valuation is known.
class IndeterminateValuation : public Error {
 public:
  using Error::Error;
};

class NotIntegral : public Error {
 public:
  using Error::Error;
};

class InsufficientPrecision : public Error {
 public:
  using Error::Error;
};

// A value lies outside the value group of the field.
class LatticeError : public Error {
 public:
  using Error::Error;
};

// The requested operation is not supported for this spec/degree combination.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace valrv
