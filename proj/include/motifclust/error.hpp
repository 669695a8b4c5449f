#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace motifclust {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid arguments or preconditions violated by the caller.
class UsageError : public Error {
 public:
  using Error::Error;
};

// A computation refused because the input exceeds a configured size guard.
class SizeLimitError : public UsageError {
 public:
  using UsageError::UsageError;
};

class IoError : public Error {
 public:
  using Error::Error;
};

// Malformed file content. Carries the 1-based line number of the offending line.
class ParseError : public Error {
 public:
  ParseError(const std::string& source, std::size_t line, const std::string& message)
      : Error(source + ":" + std::to_string(line) + ": " + message), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace motifclust
