#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace dp5 {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A mathematical or model-level failure. `code()` is a short stable tag
/// such as "not-cyclic" or "degenerate-orbit" that callers may switch on.
class DomainError : public Error {
 public:
  DomainError(std::string code, const std::string& what)
      : Error(code + ": " + what), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

/// Malformed input (bad selector, wrong vector length, ...).
class UsageError : public Error {
 public:
  using Error::Error;
};

}  // namespace dp5
