#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace skeinpf {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (matrix strings, partitions).
class ParseError : public Error {
 public:
  using Error::Error;
};

class DeterminantError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class CommutationError : public Error {
 public:
  using Error::Error;
};

/// An enumeration would have to visit more than `cap` elements.
class CapExceeded : public Error {
 public:
  CapExceeded(std::string what_size, std::uint64_t cap)
      : Error("enumeration cap exceeded: size " + what_size + " > cap " +
              std::to_string(cap)),
        size_(std::move(what_size)),
        cap_(cap) {}

  const std::string& size() const noexcept { return size_; }
  std::uint64_t cap() const noexcept { return cap_; }

 private:
  std::string size_;
  std::uint64_t cap_;
};

/// Burnside averaging requested where Id - g^k is singular.
class DegenerateError : public Error {
 public:
  using Error::Error;
};

/// An exact division failed. Never happens for genuine inputs.
class NonIntegralError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition of an operation was violated.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace skeinpf
