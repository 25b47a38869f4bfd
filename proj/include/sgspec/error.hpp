#pragma once

#include <stdexcept>
#include <string>

namespace sgspec {

// Every error raised by the library derives from Error so callers (the CLI,
// sweeps) can catch the family in one place and still dispatch on kind.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidParams : public Error {
 public:
  using Error::Error;
};

// k = 1: no private blocks, so X' and the closed forms are undefined.
class DegenerateFamily : public Error {
 public:
  using Error::Error;
};

class UnsupportedShape : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class SingularInput : public Error {
 public:
  using Error::Error;
};

class SingularBlock : public Error {
 public:
  using Error::Error;
};

// An exact division that should have been exact was not.
class InternalError : public Error {
 public:
  using Error::Error;
};

class NotSymmetric : public Error {
 public:
  using Error::Error;
};

class NotConverged : public Error {
 public:
  using Error::Error;
};

class ComplexRoots : public Error {
 public:
  using Error::Error;
};

class DegenerateLeading : public Error {
 public:
  using Error::Error;
};

}  // namespace sgspec
