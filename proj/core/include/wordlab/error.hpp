#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wordlab {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : Error("parse error at position " + std::to_string(position) + ": " + message),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class UnknownGenerator : public Error {
 public:
  using Error::Error;
};

class AlphabetMismatch : public Error {
 public:
  AlphabetMismatch() : Error("words are over different alphabets") {}
};

// A precondition on the arguments of an operation does not hold.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Exponent arithmetic left the 64-bit range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

// The word is outside the commutator subgroup, so its commutator length is infinite.
class InfiniteCommutatorLength : public Error {
 public:
  InfiniteCommutatorLength()
      : Error("word has nonzero abelianization; commutator length is infinite") {}
};

}  // namespace wordlab
