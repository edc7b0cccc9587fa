#pragma once

#include <stdexcept>

namespace ltd {

/// A signal or right-hand side does not have the length the operation needs.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The input signal is shorter than the operation's minimum length.
class TooShortError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A parameter is outside its documented range (window, ratio, rank, ...).
class BadParamsError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Forward elimination met a pivot too small to divide by safely.
class ZeroPivotError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A probability grid was requested for a distribution with zero spread.
class DegenerateDistributionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A file could not be opened or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A text input file could not be parsed; the message carries the line number.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A results document is structurally valid JSON but violates the schema.
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A record set does not cover every (problem, algorithm) pair exactly once.
class IncompleteMatrixError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace ltd
