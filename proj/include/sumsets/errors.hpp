#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sumsets {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input carries a repeated value where a set was required.
struct DuplicateElement : Error {
  using Error::Error;
};

// Operation needs more elements than the input provides.
struct TooSmall : Error {
  using Error::Error;
};

// A point map given as a table lacks a value for some element.
struct IncompleteMap : Error {
  using Error::Error;
};

// A theorem hypothesis the operation relies on does not hold.
struct HypothesisError : Error {
  using Error::Error;
};

struct SizeMismatch : Error {
  using Error::Error;
};

// Sigma argument is not a permutation of the expected index range.
struct InvalidSigma : Error {
  using Error::Error;
};

struct NotPrime : Error {
  using Error::Error;
};

struct NeedOddSize : Error {
  using Error::Error;
};

struct InvalidBlockCount : Error {
  using Error::Error;
};

struct BudgetTooSmall : Error {
  using Error::Error;
};

// Malformed textual input (rational literals, set files, flags values).
struct ParseError : Error {
  using Error::Error;
};

struct RecordCorrupt : Error {
  RecordCorrupt(std::size_t line_number, const std::string& detail)
      : Error("record store line " + std::to_string(line_number) + ": " + detail),
        line(line_number) {}

  std::size_t line;
};

}  // namespace sumsets
