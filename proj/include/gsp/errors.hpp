#pragma once

#include <stdexcept>
#include <string>

namespace gsp {

// Argument errors are std::invalid_argument and range errors std::out_of_range.
// The types below cover the remaining failure classes.

// A vertex name or index that does not belong to the universe.
class LookupError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// An input exceeds the cap of an exhaustive routine.
class SizeLimitError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// A condition that the algorithms guarantee was found broken.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Malformed text input; carries the 1-based line number.
class ParseError : public std::invalid_argument {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::invalid_argument("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace gsp
