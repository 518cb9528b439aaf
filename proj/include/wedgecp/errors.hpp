#pragma once

#include <stdexcept>
#include <string>

namespace wedgecp {

/// Argument outside the mathematical domain of a function (e.g. Ci at x <= 0).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Evaluation point sits on a physical divergence: a kernel argument below
/// the singular threshold, or an atom on one of the conducting plates.
class SingularityError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Invalid model data or configuration (empty atom, negative alpha, ...).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed input file. The message names the offending line.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& source, int line, const std::string& what)
      : std::runtime_error(source + ":" + std::to_string(line) + ": " + what),
        line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace wedgecp
