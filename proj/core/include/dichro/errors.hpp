#ifndef DICHRO_ERRORS_HPP
#define DICHRO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dichro {

// Base of every domain error raised by the library. The CLI maps these to
// exit code 1; anything else escaping is a bug.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad instance parameters, mismatched shapes, out-of-range codes.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Materialization, solver or oracle limits exceeded.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

// The refuter was handed a coloring with more colors than the depth.
class PaletteTooLarge : public Error {
 public:
  using Error::Error;
};

// Malformed coloring or edge-list input.
class FormatError : public Error {
 public:
  using Error::Error;
};

// A cycle witness failed re-validation.
class CorruptWitness : public Error {
 public:
  using Error::Error;
};

}  // namespace dichro

#endif  // DICHRO_ERRORS_HPP
