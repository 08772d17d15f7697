#ifndef QUADMONO_ERROR_HPP
#define QUADMONO_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace quadmono {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A generator or strand index outside the valid range.
class IndexError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Enumeration would exceed the configured work cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// Malformed table, presentation or group input; carries a 1-based location.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace quadmono

#endif  // QUADMONO_ERROR_HPP
