#pragma once

#include <stdexcept>
#include <string>

namespace manin {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: dimension mismatch, bad rational syntax, invalid class.
class InputError : public Error {
 public:
  using Error::Error;
};

// Dataset schema violation. `field()` is a dotted path into the document.
class SchemaError : public InputError {
 public:
  SchemaError(std::string field, const std::string& what)
      : InputError(field + ": " + what), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

// An operation was called outside its domain (point not in cone, L not big).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A configurable search or closure bound was reached.
class BoundExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace manin
