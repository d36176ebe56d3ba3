#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sadf {

/// Lexical or grammatical error in a formula, ADF/AF document or
/// interpretation literal. Positions are 1-based; 0 means "not applicable".
class ParseError : public std::runtime_error {
public:
  ParseError(std::string message, std::size_t line, std::size_t column)
      : std::runtime_error(std::move(message)), line_(line), column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

/// Violated precondition: mismatched universes, unknown argument names,
/// queries on undecided arguments, and the like.
class DomainError : public std::runtime_error {
public:
  explicit DomainError(const std::string& message)
      : std::runtime_error(message) {}
};

/// Join of two interpretations that assign opposite decided values.
class ConflictError : public DomainError {
public:
  explicit ConflictError(const std::string& argument)
      : DomainError("join conflict on argument '" + argument + "'"),
        argument_(argument) {}

  const std::string& argument() const { return argument_; }

private:
  std::string argument_;
};

/// An enumeration or classification size cap was exceeded.
class CapExceededError : public std::runtime_error {
public:
  explicit CapExceededError(const std::string& message)
      : std::runtime_error(message) {}
};

/// Witness request for an argument that is not strongly
/// acceptable/deniable under any ancestor set.
class NoWitnessError : public std::runtime_error {
public:
  explicit NoWitnessError(const std::string& message)
      : std::runtime_error(message) {}
};

/// A lattice self-check failed. Unreachable unless the solver is buggy.
class LatticeError : public std::logic_error {
public:
  explicit LatticeError(const std::string& message)
      : std::logic_error(message) {}
};

}  // namespace sadf
