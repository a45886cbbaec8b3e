#pragma once

#include <stdexcept>
#include <string>

namespace semireg {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was called outside its documented precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A configured search or enumeration bound would be exceeded.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// A ring or module spec string could not be parsed.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// A mathematical invariant that must hold by construction failed.
/// Seeing one of these means a bug (or a counterexample to a theorem).
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace semireg
