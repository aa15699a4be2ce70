#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "wittorders/coefficient_ring.hpp"
#include "wittorders/group.hpp"
#include "wittorders/guards.hpp"
#include "wittorders/linalg.hpp"

namespace wittorders {

// Coordinates of an algebra element in the algebra's basis.
using Element = Vector;

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

// An order over W_n(F_q) that is free of rank r, presented by structure
// constants: b_i * b_j = sum_v c(i, j, v) b_v.
//
// Algebras are immutable and shared through AlgebraPtr. Element arithmetic
// checks lengths and throws DimensionMismatch on foreign elements.
class Algebra {
 public:
  struct SparseConstant {
    std::size_t i, j, v;
    Scalar value;
  };

  // Validates associativity and the identity exhaustively over basis triples.
  // Throws AssociativityViolation / IdentityViolation with a witness, or
  // CostGuardExceeded if rank > guards.max_rank.
  static AlgebraPtr make(CoefficientRing ring, std::size_t rank, std::vector<Scalar> dense_constants,
                         Element identity, const Guards& guards = {});
  static AlgebraPtr make_sparse(CoefficientRing ring, std::size_t rank,
                                const std::vector<SparseConstant>& constants, Element identity,
                                const Guards& guards = {});

  const CoefficientRing& ring() const { return ring_; }
  std::size_t rank() const { return rank_; }
  const Scalar& constant(std::size_t i, std::size_t j, std::size_t v) const {
    return constants_[(i * rank_ + j) * rank_ + v];
  }
  const std::vector<Scalar>& constants() const { return constants_; }
  const Element& identity() const { return identity_; }

  // Caller-asserted: the order lives in a separable algebra after inverting p.
  // Never checked.
  bool separable_ambient() const { return separable_ambient_; }
  AlgebraPtr with_separable_ambient(bool flag) const;

  Element zero() const { return Element(rank_); }
  Element basis(std::size_t i) const;
  Element scalar(const Scalar& s) const;
  Element add(const Element& a, const Element& b) const;
  Element sub(const Element& a, const Element& b) const;
  Element neg(const Element& a) const;
  Element scale(const Scalar& s, const Element& a) const;
  Element multiply(const Element& a, const Element& b) const;
  Element product(const Element& a, const Element& b, const Element& c) const {
    return multiply(multiply(a, b), c);
  }

  // Matrices of x -> a*x and x -> x*a acting on coordinate columns, so that
  // left(a) left(b) = left(ab) and right(a) right(b) = right(ba).
  Matrix left_regular(const Element& a) const;
  Matrix right_regular(const Element& a) const;

  // a is a unit iff left(a) is invertible mod p.
  bool is_unit(const Element& a) const;
  // Throws NotAUnit.
  Element unit_inverse(const Element& a) const;
  bool is_idempotent(const Element& e) const { return multiply(e, e) == e; }
  bool is_central(const Element& z) const;
  bool is_commutative() const;

  // Same constants read in W_m, m <= n.
  AlgebraPtr truncated(std::size_t m) const;

  // Generators (Howell rows) of the centre as a submodule of the algebra.
  std::vector<Element> center_generators() const;

  void check(const Element& a) const;

 private:
  Algebra(CoefficientRing ring, std::size_t rank, std::vector<Scalar> constants, Element identity)
      : ring_(std::move(ring)), rank_(rank), constants_(std::move(constants)),
        identity_(std::move(identity)) {}

  CoefficientRing ring_;
  std::size_t rank_;
  std::vector<Scalar> constants_;
  Element identity_;
  bool separable_ambient_ = false;
};

// ring[G] with basis the group elements.
AlgebraPtr group_algebra(const GroupTable& group, const CoefficientRing& ring,
                         const Guards& guards = {});

// W_n(F_q) as a free algebra of rank deg over W_n(F_p) with basis 1, x, ..., x^(deg-1).
AlgebraPtr restriction_of_scalars(const CoefficientRing& ring, const Guards& guards = {});

// Matrix of x -> s*x on the basis of restriction_of_scalars(ring), in row
// convention, for a scalar s of the larger ring.
Matrix scalar_action_matrix(const CoefficientRing& ring, const Scalar& s);

struct MatrixRing {
  AlgebraPtr algebra;
  std::size_t size = 0;
  std::size_t inner_rank = 0;
  // Diagonal matrix units E_aa (x) 1.
  std::vector<Element> diagonal_idempotents;

  // Basis index of E_ab (x) b_i.
  std::size_t index(std::size_t a, std::size_t b, std::size_t i) const {
    return (a * size + b) * inner_rank + i;
  }
  // The element E_ab (x) x for x in the inner algebra.
  Element unit(std::size_t a, std::size_t b, const Element& x) const;
};

// A^{m x m}, basis E_ab (x) b_i.
MatrixRing matrix_ring(const AlgebraPtr& inner, std::size_t m, const Guards& guards = {});

struct Condensation {
  AlgebraPtr corner;
  // Row k holds the coordinates in the ambient algebra of the k-th basis
  // element of the corner.
  Matrix embedding;
  std::vector<std::size_t> pivot_columns;
  Element idempotent;

  Element embed(const Element& corner_element) const;
  // Coordinates in the corner basis of an ambient element lying in eAe.
  Element coordinates(const CoefficientRing& ring, const Element& ambient) const;
};

// eAe with a basis read off the Howell form of {e b_i e}. Throws
// NotIdempotent, or NonFreeCorner if the image lattice is not free.
Condensation condense(const AlgebraPtr& algebra, const Element& e, const Guards& guards = {});

// A (x) A^op, basis index i * r + i'.
AlgebraPtr tensor_opposite(const AlgebraPtr& algebra, const Guards& guards = {});

}  // namespace wittorders
