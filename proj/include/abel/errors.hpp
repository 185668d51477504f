#ifndef ABEL_ERRORS_HPP
#define ABEL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace abel {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Rank outside the bounds allowed for a family.
class RankBoundsError : public Error {
public:
  using Error::Error;
};

// Coefficient sequences of different lengths were combined.
class DimensionError : public Error {
public:
  using Error::Error;
};

// A root that does not belong to the positive system at hand.
class InvalidRootError : public Error {
public:
  using Error::Error;
};

// A generator set violating incomparability or the pair-sum condition.
class AdmissibilityError : public Error {
public:
  using Error::Error;
};

// Index sequences that do not describe a valid antichain.
class InvalidAntichainError : public Error {
public:
  using Error::Error;
};

// Request exceeding a configured resource cap.
class ResourceBoundError : public Error {
public:
  using Error::Error;
};

// Operation not defined for the given family.
class UnsupportedTypeError : public Error {
public:
  using Error::Error;
};

// Exact integer arithmetic would overflow the machine word.
class ArithmeticCapacityError : public Error {
public:
  using Error::Error;
};

// Malformed command-line input.
class UsageError : public Error {
public:
  using Error::Error;
};

// Filesystem failure while writing command output.
class IoError : public Error {
public:
  using Error::Error;
};

} // namespace abel

#endif
