#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pbv {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NonConfluentRules : Error {
  using Error::Error;
};
struct IndexOutOfRange : Error {
  using Error::Error;
};
struct PresentationMismatch : Error {
  using Error::Error;
};
struct DegreeMismatch : Error {
  using Error::Error;
};
struct ArityMismatch : Error {
  using Error::Error;
};
struct DegreeOutOfRange : Error {
  using Error::Error;
};
struct NotPoissonDerivation : Error {
  using Error::Error;
};
struct NotClosed : Error {
  using Error::Error;
};
struct DivisionInconsistent : Error {
  using Error::Error;
};
struct NotGraded : Error {
  using Error::Error;
};
struct NotFreePresentation : Error {
  using Error::Error;
};

struct ParseError : Error {
  std::size_t line;
  std::size_t column;
  ParseError(const std::string& msg, std::size_t line_, std::size_t col_)
      : Error(msg + " at line " + std::to_string(line_) + ", column " + std::to_string(col_)),
        line(line_),
        column(col_) {}
};

} // namespace pbv
