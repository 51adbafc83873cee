#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dipt {

/// Malformed text input. `position()` is the 0-based offset of the
/// offending character, or the 1-based line number for line formats.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}

  /// Error in a line-oriented file; `position()` is the 1-based line.
  static ParseError at_line(const std::string& what, std::size_t line) { return ParseError(what, line, 0); }

  std::size_t position() const { return position_; }

 private:
  ParseError(const std::string& what, std::size_t line, int)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), position_(line) {}

  std::size_t position_;
};

}  // namespace dipt
