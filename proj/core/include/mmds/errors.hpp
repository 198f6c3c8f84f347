#pragma once

#include <stdexcept>
#include <string>

namespace mmds {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed topology or demand input. line() is 1-based, 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// A view selection or input violates the problem model.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// An exhaustive search refused to run because its enumeration guard was exceeded.
class GuardExceeded : public Error {
 public:
  using Error::Error;
};

// A solver detected that its own output is inconsistent. Never expected; always a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace mmds
