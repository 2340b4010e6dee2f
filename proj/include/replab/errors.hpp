#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace replab {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A state or probability outside [0,1].
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Parameters violating a model assumption (beta <= 0, negative cost, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A limit or threshold that is undefined because its defining quantity is exactly zero.
class KnifeEdgeError : public Error {
 public:
  using Error::Error;
};

class NotAnEquilibriumError : public Error {
 public:
  using Error::Error;
};

/// Bifurcation direction requested with a == 0.
class UndefinedDirectionError : public Error {
 public:
  using Error::Error;
};

class InvalidTaxError : public Error {
 public:
  using Error::Error;
};

/// Reached a branch the scenario proof shows impossible.
class InternalError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace replab
