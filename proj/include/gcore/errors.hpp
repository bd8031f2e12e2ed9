#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gcore {

class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Malformed input file; carries the 1-based line number.
class ParseError : public Error {
  public:
    ParseError(const std::string& what, std::size_t line)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const { return line_; }

  private:
    std::size_t line_;
};

class ArgumentError : public Error {
  public:
    using Error::Error;
};

class NotOuterplanarError : public Error {
  public:
    using Error::Error;
};

} // namespace gcore
