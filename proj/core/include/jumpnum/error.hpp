#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace jumpnum {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exact integer operation left the int64 range.
class ArithmeticOverflow : public Error {
 public:
  using Error::Error;
};

/// A resolution graph failed validation where a valid one was required.
class InvalidGraph : public Error {
 public:
  using Error::Error;
};

/// Argument outside an operation's domain (vertex out of range, wrong
/// dimension, non-integral divisor, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed resolution file or matrix text. Carries the 1-based line number
/// (0 when the error is not tied to a line). what() reads
/// "<reason> at line <n>: <detail>".
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& reason, const std::string& detail = {})
      : Error(format(line, reason, detail)), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  static std::string format(std::size_t line, const std::string& reason, const std::string& detail) {
    std::string out = reason;
    if (line != 0) out += " at line " + std::to_string(line);
    if (!detail.empty()) out += ": " + detail;
    return out;
  }

  std::size_t line_;
};

}  // namespace jumpnum
