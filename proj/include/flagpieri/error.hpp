#pragma once

#include <stdexcept>
#include <string>

namespace flagpieri {

// Base of every domain error raised by the library. The CLI maps these to
// exit status 1; ParseError maps to the usage status instead.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class OutOfRange : public Error {
 public:
  using Error::Error;
};

class NotGrassmannian : public Error {
 public:
  using Error::Error;
};

class TooManyParts : public Error {
 public:
  using Error::Error;
};

// A polynomial does not lie in the span of the requested Schubert basis.
class NotInSpan : public Error {
 public:
  using Error::Error;
};

class Unsupported : public Error {
 public:
  using Error::Error;
};

// Malformed textual input (permutation, partition, polynomial).
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace flagpieri
