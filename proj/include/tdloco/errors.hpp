#pragma once

#include <stdexcept>
#include <string>

namespace tdloco {

// Base for data errors raised while encoding, decoding, or parsing.
// Argument/precondition violations use std::invalid_argument instead.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A symbol sequence contains the forbidden pattern (or is otherwise not a
// codeword of the requested code).
class ConstraintError : public Error {
 public:
  using Error::Error;
};

// Stream or column count does not split into whole frames.
class FramingError : public Error {
 public:
  using Error::Error;
};

// A lexicographic index falls outside the range a message can map to.
class RangeError : public Error {
 public:
  using Error::Error;
};

// Malformed textual input (symbol tokens, grid files).
class ParseError : public Error {
 public:
  using Error::Error;
};

class ConvergenceError : public Error {
 public:
  using Error::Error;
};

}  // namespace tdloco
