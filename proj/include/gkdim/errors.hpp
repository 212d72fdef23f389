// SPDX-License-Identifier: Apache-2.0
#ifndef GKDIM_ERRORS_HPP
#define GKDIM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gkdim {

enum class ErrorKind {
  FieldMismatch,
  AmbientMismatch,
  DerivationMismatch,
  DivisionByZero,
  IndexOutOfRange,
  Overflow,
  ResourceLimit,
  InsufficientData,
  DegreeUnstable,
  Syntax,
  NegativeOrePower,
  UnstableInput,
  Input,
  Internal,
};

/// Library-wide exception type. `kind()` drives the CLI exit-code mapping.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

/// Parse error with a source position (1-based line/column).
class SyntaxError : public Error {
public:
  SyntaxError(int line, int col, const std::string& msg)
      : Error(ErrorKind::Syntax, "line " + std::to_string(line) + ", col " +
                                     std::to_string(col) + ": " + msg),
        line_(line), col_(col) {}

  int line() const { return line_; }
  int col() const { return col_; }

private:
  int line_;
  int col_;
};

inline const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::FieldMismatch: return "field-mismatch";
    case ErrorKind::AmbientMismatch: return "ambient-mismatch";
    case ErrorKind::DerivationMismatch: return "derivation-mismatch";
    case ErrorKind::DivisionByZero: return "division-by-zero";
    case ErrorKind::IndexOutOfRange: return "index-out-of-range";
    case ErrorKind::Overflow: return "overflow";
    case ErrorKind::ResourceLimit: return "resource-limit";
    case ErrorKind::InsufficientData: return "insufficient-data";
    case ErrorKind::DegreeUnstable: return "degree-unstable";
    case ErrorKind::Syntax: return "syntax";
    case ErrorKind::NegativeOrePower: return "negative-ore-power";
    case ErrorKind::UnstableInput: return "unstable-input";
    case ErrorKind::Input: return "input";
    case ErrorKind::Internal: return "internal";
  }
  return "unknown";
}

}  // namespace gkdim

#endif
