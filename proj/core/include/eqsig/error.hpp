#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace eqsig {

/// Input is well-formed but mathematically unusable (invalid diagram, singular
/// eigenspace part, move outside the matrix, ...).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidDiagram : public DomainError {
 public:
  using DomainError::DomainError;
};

class SingularFormError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Malformed document text.
class SyntaxError : public DomainError {
 public:
  SyntaxError(std::size_t line, std::size_t column, const std::string& what)
      : DomainError("syntax error at line " + std::to_string(line) + ", column " +
                    std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Parsed document that does not satisfy its kind's schema.
class SchemaError : public DomainError {
 public:
  SchemaError(std::string path, const std::string& what)
      : DomainError("schema violation at " + path + ": " + what), path_(std::move(path)) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

/// Malformed move script. `position` is a 0-based character offset.
class ScriptError : public std::runtime_error {
 public:
  ScriptError(std::size_t position, const std::string& what)
      : std::runtime_error("move script error at offset " + std::to_string(position) + ": " +
                           what),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace eqsig
