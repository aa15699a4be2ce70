#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace wittorders {

// Base class for every error raised by the library. Mathematical rejections
// (a map that is not multiplicative, a parameter set violating its identities)
// are reported as results, not exceptions.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: wrong dimensions, bad JSON, invalid descriptors.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class RingMismatch : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class CostGuardExceeded : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

class NotAUnit : public Error {
 public:
  using Error::Error;
};

class NotIdempotent : public Error {
 public:
  using Error::Error;
};

class NonFreeCorner : public Error {
 public:
  using Error::Error;
};

class NotNormal : public Error {
 public:
  using Error::Error;
};

class ConjugacyWitnessNotFound : public Error {
 public:
  using Error::Error;
};

class IncompleteAutList : public Error {
 public:
  using Error::Error;
};

class PrecisionExhausted : public Error {
 public:
  using Error::Error;
};

// The structure constants fail associativity at basis triple (i, j, l).
class AssociativityViolation : public InvalidInput {
 public:
  AssociativityViolation(std::size_t i, std::size_t j, std::size_t l)
      : InvalidInput("structure constants are not associative at basis triple (" +
                     std::to_string(i) + ", " + std::to_string(j) + ", " +
                     std::to_string(l) + ")"),
        witness{i, j, l} {}
  std::array<std::size_t, 3> witness;
};

// The designated identity fails e*b_i = b_i = b_i*e at basis index i.
class IdentityViolation : public InvalidInput {
 public:
  explicit IdentityViolation(std::size_t i)
      : InvalidInput("designated identity fails at basis index " + std::to_string(i)),
        index(i) {}
  std::size_t index;
};

// A linear system A x = b has no solution. `row` is the Howell-form pivot row
// (or -1 for a trailing nonzero) at which the reduction of b got stuck, and
// `column` the equation index where divisibility failed.
class NoSolution : public Error {
 public:
  NoSolution(long row, std::size_t column)
      : Error("linear system has no solution (stuck at equation " +
              std::to_string(column) + ")"),
        row(row),
        column(column) {}
  long row;
  std::size_t column;
};

class NotCoboundary : public Error {
 public:
  using Error::Error;
};

// Raised by the lifting step when the coboundary solve fails, which means the
// supplied depth parameter is below the true depth for this instance.
class DepthViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace wittorders
