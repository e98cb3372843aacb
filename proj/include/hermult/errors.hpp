#pragma once

#include <stdexcept>
#include <string>

namespace hermult {

/// Base of every error raised by the library. Callers that only need a
/// diagnostic can catch this; the subclasses identify the failed precondition.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArityError : public Error {
 public:
  using Error::Error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Input exceeds a desk-scale cap (tensor length, |k|, polynomial degree).
class SizeError : public Error {
 public:
  using Error::Error;
};

/// |k| - |q| is negative or odd.
class ParityError : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class NotSymmetricError : public Error {
 public:
  using Error::Error;
};

class NotPositiveDefiniteError : public Error {
 public:
  using Error::Error;
};

class SingularMatrixError : public Error {
 public:
  using Error::Error;
};

/// Malformed external input (JSON, CLI values).
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace hermult
