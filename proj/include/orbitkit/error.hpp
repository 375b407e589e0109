#pragma once

#include <stdexcept>
#include <string>

namespace orbitkit {

/// Base class for everything the library throws on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text, files, or values that violate a documented input invariant.
class InputError : public Error {
 public:
  using Error::Error;
};

/// Vector lengths that do not match the root system or nerve they are used with.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// Weyl group enumeration grew beyond the configured element cap.
class CapExceeded : public Error {
 public:
  CapExceeded(std::size_t cap)
      : Error("Weyl group enumeration exceeded cap of " + std::to_string(cap) + " elements"),
        cap_(cap) {}
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t cap_;
};

/// A certificate that is guaranteed by a theorem failed to verify. This always
/// indicates an arithmetic bug, never bad input.
class TheoremViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace orbitkit
