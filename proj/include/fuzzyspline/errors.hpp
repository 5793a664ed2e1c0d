#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

#include "fuzzyspline/validation.hpp"

namespace fuzzyspline {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A scalar argument lies outside its admissible range (alpha, t, degree).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Too few items for the requested operation.
class ArityError : public Error {
 public:
  using Error::Error;
};

/// Consecutive points coincide, so a chord-based parametrization is undefined.
class DegenerateChordError : public Error {
 public:
  DegenerateChordError(std::size_t index, const std::string& msg)
      : Error(msg), index_(index) {}

  /// Index of the first point of the zero-length chord.
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

/// The collocation system is singular or too ill-conditioned to solve.
class SolverError : public Error {
 public:
  SolverError(std::size_t pivot_row, const std::string& msg)
      : Error(msg), pivot_row_(pivot_row) {}

  std::size_t pivot_row() const noexcept { return pivot_row_; }

 private:
  std::size_t pivot_row_;
};

/// A bundle operation was applied out of the fuzzy -> alpha-cut -> reduced
/// -> defuzzified order.
class StageError : public Error {
 public:
  using Error::Error;
};

/// Input failed structural validation; carries the full report.
class ValidationError : public Error {
 public:
  explicit ValidationError(ValidationReport report)
      : Error("validation failed:\n" + report.to_string()),
        report_(std::move(report)) {}

  const ValidationReport& report() const noexcept { return report_; }

 private:
  ValidationReport report_;
};

/// Malformed dataset text. Line and column are 1-based; 0 means unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t line = 0, std::size_t column = 0)
      : Error(msg), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// A point object lacks one of the normative lateral keys.
class MissingKeyError : public ParseError {
 public:
  MissingKeyError(std::string key, const std::string& msg)
      : ParseError(msg), key_(std::move(key)) {}

  const std::string& key() const noexcept { return key_; }

 private:
  std::string key_;
};

}  // namespace fuzzyspline
