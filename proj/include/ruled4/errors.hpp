#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ruled4 {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Non-finite input, sqrt of a negative value, division by zero, ...
class DomainError : public Error {
 public:
  using Error::Error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t offset, const std::string& message)
      : Error("syntax error at offset " + std::to_string(offset) + ": " + message),
        offset_(offset),
        detail_(message) {}

  // `location` names where the expression came from, e.g. a JSON pointer.
  SyntaxError(const std::string& location, std::size_t offset, const std::string& message)
      : Error(location + ": syntax error at offset " + std::to_string(offset) + ": " + message),
        offset_(offset),
        detail_(message),
        location_(location) {}

  std::size_t offset() const noexcept { return offset_; }
  const std::string& detail() const noexcept { return detail_; }
  const std::string& location() const noexcept { return location_; }

 private:
  std::size_t offset_;
  std::string detail_;
  std::string location_;
};

class UnknownIdentifier : public Error {
 public:
  UnknownIdentifier(std::size_t offset, const std::string& name)
      : Error("unknown identifier '" + name + "' at offset " + std::to_string(offset)),
        offset_(offset),
        name_(name) {}

  std::size_t offset() const noexcept { return offset_; }
  const std::string& name() const noexcept { return name_; }

 private:
  std::size_t offset_;
  std::string name_;
};

class InconsistentSeed : public Error {
 public:
  using Error::Error;
};

class NonUnitI : public Error {
 public:
  using Error::Error;
};

class DegenerateNormal : public Error {
 public:
  using Error::Error;
};

class SingularMetric : public Error {
 public:
  using Error::Error;
};

class DirectorConstraintViolated : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

// Scene validation failure; `pointer()` is an RFC 6901 JSON pointer.
class SchemaError : public Error {
 public:
  SchemaError(std::string pointer, const std::string& message)
      : Error("schema error at " + (pointer.empty() ? std::string("/") : pointer) + ": " + message),
        pointer_(std::move(pointer)) {}

  const std::string& pointer() const noexcept { return pointer_; }

 private:
  std::string pointer_;
};

}  // namespace ruled4
