#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace elliptica {

enum class ErrorKind {
  kStructural,           // shape mismatch: exponent length, index range
  kContextMismatch,      // operands live in different graded contexts
  kNotHomogeneous,
  kInvalidContext,       // weights not positive even / not sorted
  kInvalidPresentation,  // zero / odd / mismatched relations
  kInvalidDegreeType,
  kInconsistentDegreeType,
  kDegeneratePresentation,
  kPrecondition,
  kNoEllipticSample,
  kParse,
  kOutOfRange,
  kInternal,             // a checked mathematical invariant failed
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Parse failures carry a 1-based source position.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int column)
      : Error(ErrorKind::kParse, format(what, line, column)),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  static std::string format(const std::string& what, int line, int column) {
    return "line " + std::to_string(line) + ", column " +
           std::to_string(column) + ": " + what;
  }

  int line_;
  int column_;
};

}  // namespace elliptica
