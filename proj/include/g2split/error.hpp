#pragma once

#include <stdexcept>
#include <string>

namespace g2split {

// Error categories shared by the C++ core and the C API status codes.
enum class ErrorCode {
  Parse = 1,
  DomainMismatch,
  DenominatorVanishes,
  DenominatorNotUnit,
  InvalidArgument,
  UnknownVariable,
  Undefined,
  InsufficientPoints,
  Io,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(ErrorCode::Parse, what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class DomainMismatch : public Error {
 public:
  explicit DomainMismatch(const std::string& what) : Error(ErrorCode::DomainMismatch, what) {}
};

// A denominator (or a named denominator factor) is zero at the evaluation point.
class DenominatorVanishes : public Error {
 public:
  explicit DenominatorVanishes(std::string factor)
      : Error(ErrorCode::DenominatorVanishes, "denominator factor vanishes: " + factor),
        factor_(std::move(factor)) {}
  const std::string& factor() const noexcept { return factor_; }

 private:
  std::string factor_;
};

class DenominatorNotUnit : public Error {
 public:
  explicit DenominatorNotUnit(unsigned long long prime)
      : Error(ErrorCode::DenominatorNotUnit,
              "coefficient denominator is divisible by " + std::to_string(prime)),
        prime_(prime) {}
  unsigned long long prime() const noexcept { return prime_; }

 private:
  unsigned long long prime_;
};

class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(const std::string& what) : Error(ErrorCode::InvalidArgument, what) {}
};

// A parametrization or invariant is not defined at the requested input
// (J2 = 0, vanishing resultant, theta/rho denominators, ...). `kind` is a
// stable machine-readable tag such as "J2Vanishes" or "ThetaUndefined".
class Undefined : public Error {
 public:
  Undefined(std::string kind, const std::string& what)
      : Error(ErrorCode::Undefined, kind + ": " + what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

}  // namespace g2split
