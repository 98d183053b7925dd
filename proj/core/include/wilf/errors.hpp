#pragma once

#include <stdexcept>
#include <string>

namespace wilf {

// Base class for all domain errors raised by this library. Precondition
// violations that indicate caller bugs use std::invalid_argument instead.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// The generators have gcd > 1, so the complement in N is infinite.
class NotCofiniteError : public Error {
  public:
    using Error::Error;
};

// The semigroup is all of N; quotients like c'/c are undefined there.
class DegenerateSemigroupError : public Error {
  public:
    using Error::Error;
};

// A value admits no factorization over the non-multiplicity generators.
class NotRepresentableError : public Error {
  public:
    using Error::Error;
};

// A SubsetBoundInstance failed its cap or down-set hypothesis.
class HypothesesViolatedError : public Error {
  public:
    using Error::Error;
};

// An enumeration request exceeds the configured lattice-size guard.
class GuardExceededError : public Error {
  public:
    using Error::Error;
};

// epsilon' is only defined for embedding dimensions k > 2.
class InvalidKError : public Error {
  public:
    using Error::Error;
};

}  // namespace wilf
