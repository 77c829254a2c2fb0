#ifndef SHAPELEMMA_ERRORS_HPP
#define SHAPELEMMA_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace shapelemma {

enum class ErrorKind {
  ParseError,
  ArityMismatch,
  DegenerateDegree,
  DegreeTooSmall,
  WrongArity,
  BothZero,
  ZeroInput,
  DegreeZero,
  NotZeroDimensional,
  AllEvaluationsDegenerate,
  CriticalDegreeZero,
  WrongDegree,
  GcdNotOne,
  ZeroModulus,
  NotOnVariety,
  NotIrreducible,
  StabilizationFailure,
  WorkLimitExceeded,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind)
  {
  }

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

// Carries the 1-based source position of the offending token.
class ParseError : public Error {
public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error(ErrorKind::ParseError,
              "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line), column_(column)
  {
  }

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace shapelemma

#endif
