#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ifs_cstar {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid or unsupported configuration; the CLI maps this to exit code 2.
class ConfigError : public Error {
 public:
  using Error::Error;
};

class ParseError : public ConfigError {
 public:
  ParseError(const std::string& what, std::size_t position)
      : ConfigError(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// The fixed set of a word map is empty or a non-trivial affine subspace.
class FixedSetNotPoint : public Error {
 public:
  using Error::Error;
};

// Two distinct (seed, word) pairs evaluate to the same point.
class CollisionError : public Error {
 public:
  using Error::Error;
};

class NoAdmissibleSeeds : public ConfigError {
 public:
  NoAdmissibleSeeds() : ConfigError("no admissible seeds") {}
};

// Branch decomposition requested on a system whose graphs intersect.
class NotSeparatedError : public Error {
 public:
  using Error::Error;
};

class ArityError : public Error {
 public:
  using Error::Error;
};

class BasisMismatch : public Error {
 public:
  BasisMismatch() : Error("operators live on different orbit bases") {}
};

class UnsupportedError : public Error {
 public:
  using Error::Error;
};

// Matrix evidence contradicts a theorem-derived conclusion.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace ifs_cstar
