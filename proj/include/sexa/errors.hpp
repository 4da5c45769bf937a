#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace sexa {

using BigInt = boost::multiprecision::cpp_int;

/// Root of every error thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The operation is undefined for its argument (zero reciprocal, negative
/// mantissa, irregular divisor, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The reciprocal of an irregular number has no finite base-60 expansion.
/// `residue` is the part of the mantissa coprime to 30 that witnesses it.
class IrregularError : public DomainError {
 public:
  IrregularError(BigInt mantissa, BigInt residue)
      : DomainError("irregular number " + mantissa.str() +
                    ": reciprocal not obtained (residue " + residue.str() +
                    ")"),
        mantissa_(std::move(mantissa)),
        residue_(std::move(residue)) {}

  const BigInt& mantissa() const noexcept { return mantissa_; }
  const BigInt& residue() const noexcept { return residue_; }

 private:
  BigInt mantissa_;
  BigInt residue_;
};

/// a*x = b has no solution with a finite base-60 expansion.
class NoFiniteSolution : public DomainError {
 public:
  explicit NoFiniteSolution(BigInt residue)
      : DomainError("no finite solution: reduced denominator has residue " +
                    residue.str()),
        residue_(std::move(residue)) {}

  const BigInt& residue() const noexcept { return residue_; }

 private:
  BigInt residue_;
};

/// Exponent arithmetic left the range of std::int64_t, or an exact
/// alignment would need an unreasonable number of places.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// Malformed notation. `position` is a 0-based byte offset into the input.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class SyntaxError : public ParseError {
 public:
  using ParseError::ParseError;
};

/// A digit outside [0, 59].
class RangeError : public ParseError {
 public:
  using ParseError::ParseError;
};

}  // namespace sexa
