#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace leadtrack {

/// A caller broke a documented precondition.
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A node that is not part of the graph was referenced.
class LookupError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// An objective was evaluated where it is mathematically undefined
/// (index of connectivity with no incident edges, modularity with m = 0).
class UndefinedValueError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class EmptyNetworkError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text. `line` is 1-based; 0 when the error is not tied to a line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string source, std::size_t line, const std::string& message)
      : std::runtime_error(source + ":" + std::to_string(line) + ": " + message),
        source_(std::move(source)),
        line_(line) {}

  const std::string& source() const noexcept { return source_; }
  std::size_t line() const noexcept { return line_; }

 private:
  std::string source_;
  std::size_t line_;
};

}  // namespace leadtrack
