#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace localcut {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed edge-list input. `line()` is 1-based.
class ParseError : public Error {
public:
  ParseError(std::size_t line, const std::string &what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

/// A vertex id or query index outside the admissible range.
class RangeError : public Error {
public:
  using Error::Error;
};

/// Violated algorithm precondition (k < 1, eps outside (0,1], ...).
class ParameterError : public Error {
public:
  using Error::Error;
};

/// The query oracle's hard budget was reached.
class BudgetExhausted : public Error {
public:
  explicit BudgetExhausted(std::size_t cap)
      : Error("query budget of " + std::to_string(cap) + " exhausted"),
        cap_(cap) {}

  std::size_t cap() const { return cap_; }

private:
  std::size_t cap_;
};

/// Back-projection from the split graph produced an empty right side.
class ProjectionDegenerate : public Error {
public:
  using Error::Error;
};

/// Exact oracles refuse inputs larger than their configured limits.
class LimitExceeded : public Error {
public:
  using Error::Error;
};

/// Generator parameters that admit no instance.
class ConstructionError : public Error {
public:
  using Error::Error;
};

} // namespace localcut
