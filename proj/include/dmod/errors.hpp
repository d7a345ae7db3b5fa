#pragma once

#include <stdexcept>
#include <string>

namespace dmod {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
  // Short machine-readable tag, printed by the CLI.
  virtual const char* reason() const noexcept { return "error"; }
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
  const char* reason() const noexcept override { return "invalid-argument"; }
};

class AlgebraMismatch : public Error {
 public:
  using Error::Error;
  const char* reason() const noexcept override { return "algebra-mismatch"; }
};

class AdmissibilityError : public Error {
 public:
  using Error::Error;
  const char* reason() const noexcept override { return "not-admissible"; }
};

class NondegeneracyError : public Error {
 public:
  using Error::Error;
  const char* reason() const noexcept override { return "degenerate"; }
};

class OrderingError : public Error {
 public:
  using Error::Error;
  const char* reason() const noexcept override { return "ordering-not-global"; }
};

// A degree or time budget was exhausted.
class CapExceeded : public Error {
 public:
  using Error::Error;
  const char* reason() const noexcept override { return "cap-exceeded"; }
};

// The requested case needs an algorithm branch this library does not provide.
class UnsupportedBranch : public Error {
 public:
  using Error::Error;
  const char* reason() const noexcept override { return "unsupported-branch"; }
};

class ComputationError : public Error {
 public:
  using Error::Error;
  const char* reason() const noexcept override { return "computation-failed"; }
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t pos)
      : Error(what + " at position " + std::to_string(pos)), pos_(pos) {}
  std::size_t position() const noexcept { return pos_; }
  const char* reason() const noexcept override { return "parse-error"; }

 private:
  std::size_t pos_;
};

}  // namespace dmod
