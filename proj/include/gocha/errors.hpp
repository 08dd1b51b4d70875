#pragma once

#include <stdexcept>
#include <string>

namespace gocha {

// Process exit codes used by the command line tool.
enum class ExitCode : int {
  kOk = 0,
  kValidation = 2,
  kInconsistency = 3,
  kResource = 4,
};

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
  virtual ExitCode exit_code() const = 0;
};

// Caller violated an API contract (mismatched q, relations on a free-group call, ...).
class UsageError : public Error {
 public:
  using Error::Error;
  ExitCode exit_code() const override { return ExitCode::kValidation; }
};

// Malformed input document or word; `position` is a 0-based column when known.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what, long position = -1)
      : Error(position >= 0 ? what + " (at column " + std::to_string(position + 1) + ")" : what),
        position_(position) {}
  ExitCode exit_code() const override { return ExitCode::kValidation; }
  long position() const { return position_; }

 private:
  long position_;
};

// Input outside an operation's domain (non-invertible constant term, non-tame prime, ...).
class DomainError : public Error {
 public:
  using Error::Error;
  ExitCode exit_code() const override { return ExitCode::kValidation; }
};

// Equivariant Moebius inversion requested at a degree sharing a factor with q.
class UnsupportedDegreeError : public Error {
 public:
  using Error::Error;
  ExitCode exit_code() const override { return ExitCode::kValidation; }
};

// Relation leading form is not character homogeneous.
class HeterogeneityError : public Error {
 public:
  using Error::Error;
  ExitCode exit_code() const override { return ExitCode::kValidation; }
};

// Relation expansion vanished up to the largest truncation tried.
class InconclusiveError : public Error {
 public:
  using Error::Error;
  ExitCode exit_code() const override { return ExitCode::kValidation; }
};

// A rank that must be an integer came out fractional (or negative where forbidden).
class IntegralityError : public Error {
 public:
  using Error::Error;
  ExitCode exit_code() const override { return ExitCode::kInconsistency; }
};

// A gocha expansion produced a negative coefficient.
class NonMildEvidenceError : public Error {
 public:
  using Error::Error;
  ExitCode exit_code() const override { return ExitCode::kInconsistency; }
};

// Non-invertible series constant term and similar algebraic failures.
class ArithmeticError : public Error {
 public:
  using Error::Error;
  ExitCode exit_code() const override { return ExitCode::kInconsistency; }
};

class ResourceError : public Error {
 public:
  ResourceError(const std::string& what, int completed_degree)
      : Error(what), completed_degree_(completed_degree) {}
  ExitCode exit_code() const override { return ExitCode::kResource; }
  int completed_degree() const { return completed_degree_; }

 private:
  int completed_degree_;
};

}  // namespace gocha
