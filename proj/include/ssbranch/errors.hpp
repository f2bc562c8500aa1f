#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ssbranch {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A mathematical precondition failed (zero vector, density undefined, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Linearly dependent columns handed to Gram-Schmidt or LLL.
class RankError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Input too large for an exhaustive routine or an enumeration cap.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// Instance generation ran out of resamples.
class GenerationError : public Error {
 public:
  using Error::Error;
};

/// A guarantee that must hold by construction was violated.
class InternalError : public Error {
 public:
  using Error::Error;
};

/// Malformed document. `where` is a JSON pointer or a byte offset.
class ParseError : public Error {
 public:
  ParseError(std::string where, const std::string& what)
      : Error(where.empty() ? what : where + ": " + what), where_(std::move(where)) {}

  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

}  // namespace ssbranch
