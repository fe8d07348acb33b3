#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace upmorph {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A 1-based slice index fell outside the word, or the bounds were inverted.
class RangeError : public Error {
 public:
  RangeError(const std::string& what, std::size_t index)
      : Error(what), index_(index) {}

  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

/// An argument value outside an operation's domain (empty word where a
/// nonempty one is required, a symbol outside the expected alphabet, ...).
/// Carries the offending position when there is one.
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(what) {}
  DomainError(const std::string& what, std::size_t position)
      : Error(what), position_(position) {}

  std::optional<std::size_t> position() const { return position_; }

 private:
  std::optional<std::size_t> position_;
};

/// An operation was invoked outside its stated precondition (e.g. decoding
/// under a commuting pair of images, where no unique preimage exists).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// The input word is not in the image of the morphism. `position` is the
/// leftmost image position from which no decoding can proceed.
class NoDecodeError : public Error {
 public:
  NoDecodeError(const std::string& what, std::size_t position)
      : Error(what), position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// More symbols were requested than the stream can supply (an explicit word
/// ran out, or a morphic fixed point stopped growing).
class StreamExhaustedError : public Error {
 public:
  using Error::Error;
};

/// Too few hits to build a usable phase trace; retry with a longer prefix.
class InsufficientEvidenceError : public Error {
 public:
  InsufficientEvidenceError(const std::string& what, std::size_t hits)
      : Error(what), hits_(hits) {}

  std::size_t hits() const { return hits_; }

 private:
  std::size_t hits_;
};

/// An internal consistency check failed. Indicates a bug, never expected on
/// valid inputs.
class InvariantViolationError : public Error {
 public:
  using Error::Error;
};

}  // namespace upmorph
