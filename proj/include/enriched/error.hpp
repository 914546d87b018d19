#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace enriched {

enum class ErrorKind {
  CompositionUndefined,
  EmptyChain,
  MalformedTable,
  IndexOutOfRange,
  UnknownObject,
  UnknownMorphism,
  NotSymmetric,
  NotParallel,
  NotComposable,
  AgreementFailure,
  InvalidPasting,
  BaseInvalid,
  LowerLevelInvalid,
  NotPreorder,
  BudgetExhausted,
  ConstructionFailed,
  ParseError,
  DanglingReference,
};

std::string_view kindName(ErrorKind k) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(kindName(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  // line/column are 1-based; 0 means the position is not known (schema errors carry a path instead)
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(ErrorKind::ParseError, locate(what, line, column)), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  static std::string locate(const std::string& what, std::size_t line, std::size_t column) {
    if (line == 0) return what;
    return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what;
  }
  std::size_t line_;
  std::size_t column_;
};

[[noreturn]] inline void fail(ErrorKind k, const std::string& what) { throw Error(k, what); }

}  // namespace enriched
