#pragma once

#include <stdexcept>
#include <string>

namespace hitlab {

// Base class for every error this library raises on purpose.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Argument outside an operation's stated domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

// An input edge with no elements. The empty set can never be hit.
class EmptyEdgeError : public Error {
 public:
  using Error::Error;
};

// An edge element outside {1..n}.
class ElementOutOfRangeError : public Error {
 public:
  using Error::Error;
};

// Malformed system file; carries the 1-based line number.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Sampler refusal: expected edge count too large to materialize.
class InstanceTooLargeError : public Error {
 public:
  InstanceTooLargeError(double mu, const std::string& what)
      : Error(what), mu_(mu) {}
  double mu() const { return mu_; }

 private:
  double mu_;
};

// A solve hit its node budget where an optimal answer was required.
class BudgetExceededError : public Error {
 public:
  using Error::Error;
};

}  // namespace hitlab
