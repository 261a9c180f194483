#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace scalc {

// Raised for every rejected input or violated precondition in the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A script syntax or validation error, carrying a 1-based source position.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// A module error raised while executing a script statement.
class StatementError : public Error {
 public:
  StatementError(const std::string& message, std::size_t line, const std::string& statement)
      : Error("line " + std::to_string(line) + ", statement '" + statement + "': " + message),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace scalc
