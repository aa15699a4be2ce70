#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "wittorders/coefficient_ring.hpp"

namespace wittorders {

using Vector = std::vector<Scalar>;

// Dense row-major matrix of scalars. The ring is supplied by the caller.
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Scalar> data;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}

  Scalar& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  const Scalar& at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
  Vector row(std::size_t i) const {
    return Vector(data.begin() + static_cast<std::ptrdiff_t>(i * cols),
                  data.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols));
  }
  void set_row(std::size_t i, const Vector& v);

  bool operator==(const Matrix&) const = default;
};

Matrix identity_matrix(const CoefficientRing& ring, std::size_t n);
Matrix matmul(const CoefficientRing& ring, const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& a);
Matrix add(const CoefficientRing& ring, const Matrix& a, const Matrix& b);
Matrix sub(const CoefficientRing& ring, const Matrix& a, const Matrix& b);
Matrix scale(const CoefficientRing& ring, const Scalar& s, const Matrix& a);
// Row vector times matrix.
Vector vecmat(const CoefficientRing& ring, const Vector& x, const Matrix& m);
// Matrix times column vector.
Vector matvec(const CoefficientRing& ring, const Matrix& m, const Vector& x);
Matrix truncate(const CoefficientRing& target, const Matrix& a);
Vector truncate(const CoefficientRing& target, const Vector& a);

// Square matrix over the chain ring is invertible iff it is invertible mod p.
bool is_invertible(const CoefficientRing& ring, const Matrix& m);
// Throws NotAUnit if the matrix is singular mod p.
Matrix inverse(const CoefficientRing& ring, const Matrix& m);

// Howell normal form of the row module of a matrix over a chain ring.
//
// Rows are in echelon form with pairwise distinct pivot columns; every pivot
// is p^v for some v < n, entries above a pivot are reduced modulo it, and
// the Howell property holds: for every column c, the rows with pivot column
// >= c generate all vectors of the row module that vanish before c.
// Pivot selection: minimal valuation, ties to the lowest row index.
struct HowellForm {
  Matrix rows;
  std::vector<std::size_t> pivot_cols;
  std::vector<std::size_t> pivot_vals;

  // log_q of the cardinality of the row module.
  std::size_t log_size(const CoefficientRing& ring) const;
};

HowellForm howell_form(const CoefficientRing& ring, const Matrix& m);

// Reduces v by the pivots of `form` restricted to columns < limit. Returns
// the index of the first pivot row whose divisibility check failed, or
// nothing if the reduction succeeded. `v` is updated in place.
std::optional<std::size_t> reduce_by(const CoefficientRing& ring, const HowellForm& form,
                                     Vector& v, std::size_t limit);

bool row_module_contains(const CoefficientRing& ring, const HowellForm& form, const Vector& v);

struct SolveResult {
  Vector particular;
  // Generators of the homogeneous solution module (as rows).
  std::vector<Vector> kernel;
};

// A x = b over the chain ring, with the Howell form of [A^T | I] cached so
// that repeated right-hand sides are cheap. Deterministic.
class LinearSystem {
 public:
  LinearSystem(CoefficientRing ring, Matrix a);

  const CoefficientRing& ring() const { return ring_; }
  std::size_t equations() const { return a_.rows; }
  std::size_t unknowns() const { return a_.cols; }

  // Throws NoSolution with the failing equation index.
  SolveResult solve(const Vector& b) const;
  std::optional<Vector> try_solve(const Vector& b) const;
  const std::vector<Vector>& kernel() const { return kernel_; }
  // Howell form of the row module generated by the kernel generators.
  HowellForm kernel_form() const { return howell_form(ring_, rows_to_matrix(kernel_, a_.cols)); }

  static Matrix rows_to_matrix(const std::vector<Vector>& rows, std::size_t cols);

 private:
  CoefficientRing ring_;
  Matrix a_;
  HowellForm augmented_;
  std::vector<Vector> kernel_;
};

// One-shot solve of A x = b.
SolveResult howell_solve(const CoefficientRing& ring, const Matrix& a, const Vector& b);

// Exponents e_1 >= e_2 >= ... of the invariant factors q-adic p^(e_i) of the
// quotient module span(numerator) / span(denominator), where the denominator
// span must be contained in the numerator span. Each exponent counts one
// cyclic factor over the coefficient ring.
std::vector<std::size_t> quotient_invariants(const CoefficientRing& ring,
                                             const std::vector<Vector>& numerator,
                                             const std::vector<Vector>& denominator,
                                             std::size_t cols);

}  // namespace wittorders
