#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wysiwyg {

/// Raised for invalid arguments and ill-posed requests (arity mismatch,
/// index out of range, unnormalizable scalars, ...).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a computation would exceed a configured resource cap.
/// `reached` records the size that tripped the cap.
class ResourceCapError : public std::runtime_error {
 public:
  ResourceCapError(const std::string& what, std::size_t reached)
      : std::runtime_error(what), reached_(reached) {}
  std::size_t reached() const noexcept { return reached_; }

 private:
  std::size_t reached_;
};

/// Malformed textual input; `position` is the 0-based offset of the
/// offending character.
class ParseError : public DomainError {
 public:
  ParseError(const std::string& what, std::size_t position)
      : DomainError(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace wysiwyg
