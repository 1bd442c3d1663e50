#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace linegraph {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed edge-list or graph6 input. line() is 1-based, 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// A configured size cap would be exceeded; the operation refuses instead of running.
class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& operation, std::size_t requested, std::size_t cap)
      : Error(operation + ": size " + std::to_string(requested) + " exceeds cap " +
              std::to_string(cap)),
        requested_(requested),
        cap_(cap) {}
  std::size_t requested() const noexcept { return requested_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t requested_;
  std::size_t cap_;
};

// Precondition failure: out-of-range vertex, invalid decomposition passed to a builder, etc.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// An input that must be a line graph is not.
class NotLineGraph : public Error {
 public:
  using Error::Error;
};

}  // namespace linegraph
