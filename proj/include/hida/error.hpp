#pragma once

#include <stdexcept>
#include <string>

namespace hida {

/// Malformed input: unparsable text, inconsistent JSON, bad field values.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operator was handed the wrong number of arguments.
class ArityError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A vector, tuple or degree request falls outside the active truncation caps.
class TruncationError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// A consistency gate that can only fail on a broken build (e.g. a complex
/// with nonzero square).
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace hida
