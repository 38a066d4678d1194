#pragma once

#include <stdexcept>
#include <string>

namespace tgw {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed arguments, mismatched signatures, bad indices.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// The zero element has no degree.
class UndefinedDegree : public Error {
 public:
  using Error::Error;
};

/// An element whose terms live in more than one graded component.
class Inhomogeneous : public Error {
 public:
  using Error::Error;
};

/// A requested power of a Clifford generator that is identically zero.
class Nilpotent : public Error {
 public:
  using Error::Error;
};

/// A gamma matrix failing validation was passed to a derivation.
class InvalidGamma : public Error {
 public:
  using Error::Error;
};

/// A configured cap (box size, brute-force length) would be exceeded.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

}  // namespace tgw
