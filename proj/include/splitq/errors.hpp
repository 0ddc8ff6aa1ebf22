#pragma once

#include <stdexcept>
#include <string>

namespace splitq {

// Base of every error raised by the library. Callers that only care about
// failure vs success can catch this.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Polar form / inverse requested for an element with |z|^2 <= 0.
class DegenerateNorm : public Error {
 public:
  using Error::Error;
};

// Hyperbolic phase outside [-kThetaMax, kThetaMax], or a non-finite value.
class RangeError : public Error {
 public:
  using Error::Error;
};

class NotNormalized : public Error {
 public:
  using Error::Error;
};

class NotUnitary : public Error {
 public:
  using Error::Error;
};

// A probability model whose interference terms cannot cancel.
class ConstraintViolated : public Error {
 public:
  using Error::Error;
};

// Classifier inputs with P1 <= 0 or P2 <= 0, or an unrepresentable phase.
class DegenerateInputs : public Error {
 public:
  using Error::Error;
};

// Malformed argument that is none of the above (bad ProbModel, bad grid, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace splitq
