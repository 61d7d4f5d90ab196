#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mindeg {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller passed arguments that violate an operation's precondition.
class InputError : public Error {
 public:
  using Error::Error;
};

// An operation was invoked on an object in the wrong state (e.g. an empty queue).
class StateError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

// Malformed file content. line() is 1-based, 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class UnsupportedFormatError : public ParseError {
 public:
  using ParseError::ParseError;
};

// Syntactically valid content that fails a semantic check (e.g. not a permutation).
class ValidationError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace mindeg
