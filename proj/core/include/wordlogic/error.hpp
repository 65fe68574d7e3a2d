#ifndef WORDLOGIC_ERROR_HPP
#define WORDLOGIC_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wordlogic {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input. `line` is 1-based (0 when the input is a single
/// line), `column` is the 0-based offset inside that line.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(format(message, line, column)), line_(line), column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  static std::string format(const std::string& message, std::size_t line,
                            std::size_t column) {
    std::string where = line == 0 ? "at column " + std::to_string(column)
                                  : "at line " + std::to_string(line) +
                                        ", column " + std::to_string(column);
    return "parse error " + where + ": " + message;
  }

  std::size_t line_;
  std::size_t column_;
};

}  // namespace wordlogic

#endif  // WORDLOGIC_ERROR_HPP
