#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nbc {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class EmptyGraphError : public Error {
 public:
  using Error::Error;
};

class ParameterError : public Error {
 public:
  using Error::Error;
};

// Graph is not connected and the caller did not ask for component selection.
class DisconnectedGraphError : public Error {
 public:
  using Error::Error;
};

// The requested quantity is identically zero or undefined on this input.
class DegenerateError : public Error {
 public:
  using Error::Error;
};

// Input exceeds the size cap of a desk-scale oracle.
class SizeLimitError : public Error {
 public:
  using Error::Error;
};

// Converged vector has entries that cannot belong to a Perron eigenvector.
class WrongEigenpairError : public Error {
 public:
  using Error::Error;
};

}  // namespace nbc
