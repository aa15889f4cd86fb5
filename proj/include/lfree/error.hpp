#pragma once

#include <stdexcept>
#include <string>

namespace lfree {

// Root of the library's exception hierarchy. The CLI maps InvalidInput,
// StructuralError and PreconditionError to exit status 2 and
// ResourceExceeded to exit status 3.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidInput : public Error {
 public:
  using Error::Error;
};

// Malformed shapes: tuple arity mismatches, bad multi-index tables.
class StructuralError : public Error {
 public:
  using Error::Error;
};

// An operation's documented precondition does not hold for the given data.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A configured budget (nodes, decompositions, edges) would be exceeded.
class ResourceExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace lfree
