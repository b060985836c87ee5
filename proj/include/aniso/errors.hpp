#pragma once

#include <stdexcept>
#include <string>

namespace aniso {

// Exit-code-bearing error categories used across the library and the CLI.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual int exit_code() const noexcept { return 1; }
};

// Invalid input: bad spec files, failed preconditions, non-closing arcs.
class ValidationError : public Error {
 public:
  using Error::Error;
  int exit_code() const noexcept override { return 2; }
};

class DimensionMismatch : public ValidationError {
 public:
  DimensionMismatch(int expected, int actual)
      : ValidationError("dimension mismatch: expected n=" + std::to_string(expected) +
                        ", got n=" + std::to_string(actual)),
        expected_(expected),
        actual_(actual) {}
  int expected() const noexcept { return expected_; }
  int actual() const noexcept { return actual_; }

 private:
  int expected_;
  int actual_;
};

// A numerical check did not meet its tolerance, or a computation degenerated.
class NumericalError : public Error {
 public:
  using Error::Error;
  int exit_code() const noexcept override { return 3; }
};

// A configurable work cap was exceeded.
class ResourceCapError : public Error {
 public:
  ResourceCapError(const std::string& what, long long cap) : Error(what), cap_(cap) {}
  int exit_code() const noexcept override { return 4; }
  long long cap() const noexcept { return cap_; }

 private:
  long long cap_;
};

}  // namespace aniso
