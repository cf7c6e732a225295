#pragma once

#include <stdexcept>
#include <string>

namespace latkit {

// Malformed input text (lattice files, ordinal literals, machine configs).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string msg, int line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Structurally valid input that violates an axiom or an operation's
// precondition (order cycles, broken joins, missing labels, ...).
class ConflictError : public std::runtime_error {
 public:
  explicit ConflictError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace latkit
