#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace braidpbw {

// Division by zero or inversion of zero.
class ArithmeticError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

// Operands live in different coefficient fields.
class FieldMismatch : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Precondition violated (empty word, i > r, non-Lyndon input, ...).
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

class AlphabetMismatch : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// A size guard fired; the computation was aborted rather than truncated.
class ResourceError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : std::runtime_error(what + " (line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ")"),
        line_(line), column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

} // namespace braidpbw
