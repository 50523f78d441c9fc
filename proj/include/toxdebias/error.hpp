#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace toxdebias {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input data; carries the 1-based line number when known.
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t line)
      : Error(msg + " (line " + std::to_string(line) + ")"), line_(line) {}
  explicit ParseError(const std::string& msg) : Error(msg) {}

  // 0 when the failing line is unknown.
  std::size_t line() const { return line_; }

 private:
  std::size_t line_ = 0;
};

// A metric that cannot be computed on the given inputs, e.g. AUC of a
// single-class sample set.
class UndefinedMetricError : public Error {
 public:
  using Error::Error;
};

}  // namespace toxdebias
