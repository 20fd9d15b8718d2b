#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace oddplanar {

/// Base class for every failure raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A rotation system that is not a simple sphere embedding.
class InvalidMap : public Error {
 public:
  using Error::Error;
};

/// Malformed planar_code / rotmap / certificate input. `offset` is a byte
/// offset for binary input and a 1-based line number for text input.
class FormatError : public Error {
 public:
  FormatError(const std::string& what, std::size_t offset)
      : Error(what + " (at " + std::to_string(offset) + ")"), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

class NonSimpleDual : public Error {
 public:
  using Error::Error;
};

/// Moat growth wrapped around the sphere: an intermediate region stopped
/// being a patch.
class GrowthOverflow : public Error {
 public:
  using Error::Error;
};

class NotExtremal : public Error {
 public:
  using Error::Error;
};

class NotApplicable : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace oddplanar
