#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace swdeg {

/// Caller violated a documented precondition (bad input, bad covering data,
/// mismatched groups). The CLI maps these to exit code 2.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation that is deliberately outside the supported surface
/// (e.g. exterior powers of irreducibles of dimension > 1).
class UnsupportedError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// Syntax error while parsing a textual format. Carries 1-based position.
class ParseError : public PreconditionError {
 public:
  ParseError(const std::string& msg, std::size_t line, std::size_t column)
      : PreconditionError(msg + " (line " + std::to_string(line) + ", column " +
                          std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// A parsed structure failed a semantic invariant (orthogonality, dimension
/// sums, ...). The message names the violated identity.
class ValidationError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// Fourier inversion produced a non-integral multiplicity: the given class
/// function is not a virtual character.
class NotVirtualCharacterError : public PreconditionError {
 public:
  NotVirtualCharacterError(const std::string& irrep_label,
                           const std::string& value)
      : PreconditionError("not a virtual character: multiplicity of " +
                          irrep_label + " is " + value),
        irrep_label_(irrep_label),
        value_(value) {}

  const std::string& irrep_label() const { return irrep_label_; }
  const std::string& value() const { return value_; }

 private:
  std::string irrep_label_;
  std::string value_;
};

/// A must-not-happen consistency assertion failed. Signals a bug (or an
/// invalid character table that slipped past validation), never bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace swdeg
