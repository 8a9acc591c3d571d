#pragma once

#include <stdexcept>
#include <string>

namespace ramsel {

// Base class for all library-specific failures. Callers that want a single
// catch site can catch this; std::invalid_argument is still used for plain
// precondition violations.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A greedy search ran out of stream prefix before reaching its mass target.
struct HorizonExhausted : Error {
  using Error::Error;
};

// No subfamily of the given generators covers the requested prefix.
struct NotCovered : Error {
  using Error::Error;
};

// The request exceeds an explicit combinatorial budget and will not be run.
struct TooLarge : Error {
  using Error::Error;
};

// A selector recursion needed more derivative levels than the front's depth.
struct DepthExhausted : Error {
  using Error::Error;
};

// A membership query needs more digits than the supplied prefix has.
struct PrefixTooShort : Error {
  using Error::Error;
};

}  // namespace ramsel
