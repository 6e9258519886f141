#pragma once

#include <stdexcept>
#include <string>

namespace cox {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed graph text or word input.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Input violates an operation's documented precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A configured enumeration or search cap was hit.
class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& what, std::size_t cap)
      : Error(what + " (cap " + std::to_string(cap) + ")"), cap_(cap) {}
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t cap_;
};

// A construction step failed although its inputs passed validation.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

}  // namespace cox
