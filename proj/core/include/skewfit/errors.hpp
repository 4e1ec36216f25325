#pragma once

#include <stdexcept>
#include <string>

namespace skewfit {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

struct NotPositiveDefinite : Error {
  using Error::Error;
};

struct InvalidDof : Error {
  using Error::Error;
};

struct DegenerateOrthant : Error {
  using Error::Error;
};

struct NonFinite : Error {
  using Error::Error;
};

struct SingularSystem : Error {
  using Error::Error;
};

struct AllStartsFailed : Error {
  using Error::Error;
};

struct TooManyClusters : Error {
  using Error::Error;
};

// CSV ingestion failures.
struct MissingColumn : Error {
  using Error::Error;
};

struct ParseError : Error {
  ParseError(std::size_t row, std::size_t col, const std::string& what)
      : Error("parse error at row " + std::to_string(row) + ", column " +
              std::to_string(col) + ": " + what),
        row(row),
        col(col) {}
  std::size_t row;
  std::size_t col;
};

struct EmptyData : Error {
  using Error::Error;
};

struct ZeroVariance : Error {
  using Error::Error;
};

struct IoError : Error {
  using Error::Error;
};

}  // namespace skewfit
