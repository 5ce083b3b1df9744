/**
 * @file errors.hpp
 * @brief Error kinds raised by the modend library.
 *
 * Every failure that is not a validation report entry is thrown as a
 * modend::Error carrying an ErrorKind, so callers (the CLI in particular)
 * can map failures onto exit codes without parsing messages.
 */

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace modend {

enum class ErrorKind {
  DivisionByZero,
  ZeroDivisorDetected,
  DimensionMismatch,
  UnknownLabel,
  InconsistentRigidity,
  NotATensorSubcategory,
  SourceTargetMismatch,
  OracleMismatch,
  SerreCertificateFailure,
  UpsilonMismatch,
  ParseError,
  ValidationError,
  UnknownCommand,
  UnknownName,
  SingularMatrix,
};

inline const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::ZeroDivisorDetected: return "ZeroDivisorDetected";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::UnknownLabel: return "UnknownLabel";
    case ErrorKind::InconsistentRigidity: return "InconsistentRigidity";
    case ErrorKind::NotATensorSubcategory: return "NotATensorSubcategory";
    case ErrorKind::SourceTargetMismatch: return "SourceTargetMismatch";
    case ErrorKind::OracleMismatch: return "OracleMismatch";
    case ErrorKind::SerreCertificateFailure: return "SerreCertificateFailure";
    case ErrorKind::UpsilonMismatch: return "UpsilonMismatch";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ValidationError: return "ValidationError";
    case ErrorKind::UnknownCommand: return "UnknownCommand";
    case ErrorKind::UnknownName: return "UnknownName";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Collected constraint violations; empty means valid.
struct ValidationReport {
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
  void add(std::string v) { violations.push_back(std::move(v)); }
  void merge(const ValidationReport& o) {
    violations.insert(violations.end(), o.violations.begin(), o.violations.end());
  }
};

}  // namespace modend
