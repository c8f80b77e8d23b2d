#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace sl2coh {

/// Base of every error raised by the library.
class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two operands live over different base rings (e.g. ZZ and ZZ/4).
class RingMismatch : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

class DivisionByZero : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

/// An exact division left a remainder; `monomial()` names the offending term.
class NotDivisible : public AlgebraError {
 public:
  NotDivisible(const std::string& what, std::string monomial)
      : AlgebraError(what), monomial_(std::move(monomial)) {}
  const std::string& monomial() const noexcept { return monomial_; }

 private:
  std::string monomial_;
};

class SubstitutionError : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

/// Operands disagree on variables, groups, coefficient modules or shapes.
class ShapeMismatch : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

/// A symbolic identity that must hold did not; `witness()` is the nonzero residue.
class VerificationFailed : public AlgebraError {
 public:
  VerificationFailed(const std::string& what, std::string witness)
      : AlgebraError(what + (witness.empty() ? "" : ": " + witness)),
        witness_(std::move(witness)) {}
  const std::string& witness() const noexcept { return witness_; }

 private:
  std::string witness_;
};

class InvalidArgument : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

}  // namespace sl2coh
