#include <gtest/gtest.h>

#include "wittorders/algebra.hpp"
#include "wittorders/errors.hpp"

using namespace wittorders;

namespace {

// Independent associativity check over every basis triple.
bool associative(const Algebra& a) {
  for (std::size_t i = 0; i < a.rank(); ++i) {
    for (std::size_t j = 0; j < a.rank(); ++j) {
      for (std::size_t k = 0; k < a.rank(); ++k) {
        const Element x = a.basis(i), y = a.basis(j), z = a.basis(k);
        if (a.multiply(a.multiply(x, y), z) != a.multiply(x, a.multiply(y, z))) return false;
      }
    }
  }
  return true;
}

TEST(GroupAlgebra, BasicShape) {
  const CoefficientRing ring(3, 2);
  const auto a = group_algebra(cyclic_group(3), ring);
  EXPECT_EQ(a->rank(), 3u);
  EXPECT_TRUE(a->is_commutative());
  EXPECT_EQ(a->identity(), a->basis(0));
  EXPECT_EQ(a->multiply(a->basis(1), a->basis(2)), a->basis(0));
  EXPECT_TRUE(associative(*a));

  const auto s3 = group_algebra(symmetric_group_3(), ring);
  EXPECT_FALSE(s3->is_commutative());
  EXPECT_TRUE(associative(*s3));
}

TEST(Algebra, RejectsNonAssociativeConstants) {
  // e1 e1 = e2, e2 e1 = e1, everything else zero apart from the identity e0.
  const CoefficientRing ring(2, 1);
  std::vector<Algebra::SparseConstant> c;
  for (std::size_t i = 0; i < 3; ++i) {
    c.push_back({0, i, i, ring.one()});
    if (i != 0) c.push_back({i, 0, i, ring.one()});
  }
  c.push_back({1, 1, 2, ring.one()});
  c.push_back({2, 1, 1, ring.one()});
  Element one(3);
  one[0] = ring.one();
  try {
    Algebra::make_sparse(ring, 3, c, one);
    FAIL() << "expected AssociativityViolation";
  } catch (const AssociativityViolation& e) {
    EXPECT_EQ(e.witness[0], 1u);
  }
}

TEST(Algebra, RejectsWrongIdentity) {
  const CoefficientRing ring(3, 1);
  const auto a = group_algebra(cyclic_group(3), ring);
  EXPECT_THROW(Algebra::make(ring, 3, a->constants(), a->basis(1)), IdentityViolation);
}

TEST(Algebra, RankGuard) {
  Guards g;
  g.max_rank = 2;
  EXPECT_THROW(group_algebra(cyclic_group(3), CoefficientRing(2, 1), g), CostGuardExceeded);
}

TEST(Algebra, RegularRepresentationsAndUnits) {
  const CoefficientRing ring(3, 2);
  const auto a = group_algebra(symmetric_group_3(), ring);
  const Element x = a->add(a->basis(1), a->scale(ring.from_int(3), a->basis(3)));
  const Element y = a->add(a->basis(2), a->identity());
  const auto& r = ring;
  EXPECT_EQ(matmul(r, a->left_regular(x), a->left_regular(y)), a->left_regular(a->multiply(x, y)));
  EXPECT_EQ(matmul(r, a->right_regular(x), a->right_regular(y)), a->right_regular(a->multiply(y, x)));

  ASSERT_TRUE(a->is_unit(x));
  const Element xi = a->unit_inverse(x);
  EXPECT_EQ(a->multiply(x, xi), a->identity());
  EXPECT_EQ(a->multiply(xi, x), a->identity());

  // 1 - g is nilpotent mod 3 for an element g of order 3.
  const Element nil = a->sub(a->identity(), a->basis(3));
  EXPECT_FALSE(a->is_unit(nil));
  EXPECT_THROW(a->unit_inverse(nil), NotAUnit);
}

TEST(Algebra, CentreOfS3IsSpannedByClassSums) {
  const CoefficientRing ring(3, 2);
  const auto a = group_algebra(symmetric_group_3(), ring);
  const auto centre = a->center_generators();
  EXPECT_EQ(centre.size(), 3u);
  for (const auto& z : centre) EXPECT_TRUE(a->is_central(z));
  EXPECT_FALSE(a->is_central(a->basis(1)));
}

TEST(Algebra, ForeignElementsAreRejected) {
  const auto a = group_algebra(cyclic_group(2), CoefficientRing(2, 2));
  EXPECT_THROW(a->multiply(Element(3), a->identity()), DimensionMismatch);
}

TEST(Algebra, TruncationKeepsTheConstants) {
  const auto a = group_algebra(cyclic_group(3), CoefficientRing(3, 3));
  const auto t = a->truncated(1);
  EXPECT_EQ(t->ring().length(), 1u);
  EXPECT_EQ(t->rank(), 3u);
  EXPECT_EQ(t->multiply(t->basis(2), t->basis(2)), t->basis(1));
}

TEST(MatrixRing, UnitsAndCondensation) {
  const CoefficientRing ring(3, 2);
  const auto base = group_algebra(GroupTable(), ring);
  const MatrixRing m = matrix_ring(base, 2);
  EXPECT_EQ(m.algebra->rank(), 4u);
  EXPECT_FALSE(m.algebra->is_commutative());
  const Element one = base->identity();
  EXPECT_EQ(m.algebra->multiply(m.unit(0, 1, one), m.unit(1, 0, one)), m.unit(0, 0, one));
  EXPECT_EQ(m.algebra->add(m.diagonal_idempotents[0], m.diagonal_idempotents[1]),
            m.algebra->identity());

  const Condensation c = condense(m.algebra, m.diagonal_idempotents[0]);
  EXPECT_EQ(c.corner->rank(), 1u);
  EXPECT_EQ(c.embed(c.corner->identity()), m.diagonal_idempotents[0]);
  EXPECT_THROW(condense(m.algebra, m.unit(0, 1, one)), NotIdempotent);

  const auto centre = m.algebra->center_generators();
  EXPECT_EQ(centre.size(), 1u);
}

TEST(Condense, CornerOfAGroupAlgebraMatrixRing) {
  const CoefficientRing ring(3, 2);
  const MatrixRing m = matrix_ring(group_algebra(cyclic_group(2), ring), 2);
  const Condensation c = condense(m.algebra, m.diagonal_idempotents[1]);
  EXPECT_EQ(c.corner->rank(), 2u);
  EXPECT_TRUE(c.corner->is_commutative());
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      const Element lhs = c.embed(c.corner->multiply(c.corner->basis(i), c.corner->basis(j)));
      const Element rhs = m.algebra->multiply(c.embed(c.corner->basis(i)), c.embed(c.corner->basis(j)));
      EXPECT_EQ(lhs, rhs);
    }
  }
}

TEST(Condense, CornerAtTheIdentityIsEverything) {
  // Z/4[x]/(x^2 - 2x) has no idempotents besides 0 and 1.
  const CoefficientRing ring(2, 2);
  std::vector<Algebra::SparseConstant> c = {
      {0, 0, 0, ring.one()}, {0, 1, 1, ring.one()}, {1, 0, 1, ring.one()}, {1, 1, 1, ring.from_int(2)}};
  Element one(2);
  one[0] = ring.one();
  const auto a = Algebra::make_sparse(ring, 2, c, one);
  EXPECT_EQ(condense(a, a->identity()).corner->rank(), 2u);
  EXPECT_THROW(condense(a, a->basis(1)), NotIdempotent);
}

TEST(TensorOpposite, RankAndIdentity) {
  const auto a = group_algebra(cyclic_group(3), CoefficientRing(2, 1));
  const auto e = tensor_opposite(a);
  EXPECT_EQ(e->rank(), 9u);
  EXPECT_EQ(e->identity(), e->basis(0));
}

TEST(RestrictionOfScalars, GaloisRingOverPrimeRing) {
  const CoefficientRing big(FiniteField(2, 2), 2);
  const auto a = restriction_of_scalars(big);
  EXPECT_EQ(a->rank(), 2u);
  EXPECT_TRUE(a->is_commutative());
  EXPECT_EQ(a->ring().degree(), 1u);
  // Multiplication by a scalar is linear over the smaller ring and multiplicative.
  const Scalar t = big.teichmuller(big.field().generator());
  const Matrix mt = scalar_action_matrix(big, t);
  const Matrix mt2 = scalar_action_matrix(big, big.mul(t, t));
  EXPECT_EQ(matmul(a->ring(), mt, mt), mt2);
}

}  // namespace
