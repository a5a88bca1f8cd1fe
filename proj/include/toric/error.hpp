#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace toric {

// Base for every error the library reports; callers that only care about
// "input was bad" can catch this one.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class RankError : public Error {
 public:
  using Error::Error;
};

// Fan combinatorics violate an assumption (wall not two-sided, star not a
// cycle, ray in no maximal cone, ...).
class StructureError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class UnsupportedError : public Error {
 public:
  using Error::Error;
};

// Generator list does not describe a Fano polytope (origin not strictly
// interior, or the points are not full-dimensional).
class NotFanoInputError : public Error {
 public:
  using Error::Error;
};

class NonVertexGeneratorError : public Error {
 public:
  using Error::Error;
};

class NonSimplicialError : public UnsupportedError {
 public:
  using UnsupportedError::UnsupportedError;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error("line " + std::to_string(line) + ": " + message), line_(line), detail_(message) {}

  std::size_t line() const noexcept { return line_; }
  // The message without the line prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::size_t line_;
  std::string detail_;
};

}  // namespace toric
