#pragma once

#include <stdexcept>
#include <string>

namespace trusskit {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: bad group specs, table shapes, mismatched groups.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// An enumeration or table would exceed the configured bound.
class BoundExceeded : public Error {
 public:
  using Error::Error;
};

class NotAHeapMorphism : public Error {
 public:
  using Error::Error;
};

class NotAnIsomorphism : public Error {
 public:
  using Error::Error;
};

class InvalidEquivalence : public Error {
 public:
  using Error::Error;
};

}  // namespace trusskit
