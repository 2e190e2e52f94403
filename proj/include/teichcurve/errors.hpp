#pragma once

#include <stdexcept>
#include <string>

namespace teichcurve {

// Base of every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the domain of the operation (Im z < 0, |z| > 1, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Requested feature is not modeled, e.g. a fourth term-wise derivative.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

// Sampled boundary map violates its invariants (non-monotone, bad anchor).
class InvalidMapError : public Error {
 public:
  using Error::Error;
};

// Samples are too sparse to decide the lift branch unambiguously.
class BranchAmbiguityError : public Error {
 public:
  using Error::Error;
};

// Input is well formed but degenerate for the request (zero cusp form).
class DegenerateInputError : public Error {
 public:
  using Error::Error;
};

}  // namespace teichcurve
