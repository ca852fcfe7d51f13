#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ivdyn {

/// Input violates a documented invariant (malformed interval, bad breakpoints).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Text could not be parsed. `line` is 1-based, 0 when not line-oriented.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line = 0)
      : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// An interval set grew past its component cap.
class ComponentOverflow : public std::runtime_error {
 public:
  ComponentOverflow(std::size_t components, std::size_t cap)
      : std::runtime_error("interval set has " + std::to_string(components) +
                           " components, cap is " + std::to_string(cap)),
        components_(components),
        cap_(cap) {}
  std::size_t components() const noexcept { return components_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t components_;
  std::size_t cap_;
};

/// Piece budget exhausted while composing; `completed_degree` is the last
/// iterate that was built in full.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, int completed_degree)
      : std::runtime_error(what), completed_degree_(completed_degree) {}
  int completed_degree() const noexcept { return completed_degree_; }

 private:
  int completed_degree_;
};

class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A re-verification of an exact result failed. Indicates a bug.
class InternalConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace ivdyn
