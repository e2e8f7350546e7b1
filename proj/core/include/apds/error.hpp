#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace apds {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed system text, atom text, or proof document.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(format(message, line, column)), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  static std::string format(const std::string& message, std::size_t line, std::size_t column) {
    if (line == 0) return message;
    return std::to_string(line) + ":" + std::to_string(column) + ": " + message;
  }

  std::size_t line_;
  std::size_t column_;
};

/// An operation was called outside its precondition (wrong system class,
/// unknown symbol, provable configuration handed to the refuter, ...).
class ContractError : public Error {
 public:
  using Error::Error;
};

}  // namespace apds
