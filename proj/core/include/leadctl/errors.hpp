#pragma once

#include <stdexcept>
#include <string>

namespace leadctl {

/// Malformed graph document. Carries the 1-based line number of the offence.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Analysis entry points require a connected graph.
class NotConnectedError : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Exhaustive enumeration refused: the instance exceeds the configured cap.
class CapExceededError : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace leadctl
