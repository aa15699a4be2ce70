#include <gtest/gtest.h>

#include "wittorders/crossed.hpp"
#include "wittorders/errors.hpp"

using namespace wittorders;

namespace {

AlgebraPtr scalars(std::uint64_t p, std::size_t n) {
  return group_algebra(GroupTable(), CoefficientRing(p, n));
}

// The product ring R x R with basis the two primitive idempotents.
AlgebraPtr split_pair(const CoefficientRing& ring) {
  std::vector<Algebra::SparseConstant> c = {{0, 0, 0, ring.one()}, {1, 1, 1, ring.one()}};
  return Algebra::make_sparse(ring, 2, c, {ring.one(), ring.one()});
}

ParameterSet s3_over_a3() {
  return group_algebra_parameter_set(symmetric_group_3(), {0, 3, 4}, CoefficientRing(3, 2)).parameters;
}

TEST(ParameterSet, TrivialSetIsValidAndNormalized) {
  const ParameterSet p = trivial_parameter_set(cyclic_group(3), scalars(3, 2));
  EXPECT_TRUE(validate_parameter_set(p).ok());
  EXPECT_TRUE(is_normalized(p));
}

TEST(ParameterSet, BrokenCocycleIsReportedWithAWitness) {
  ParameterSet p = trivial_parameter_set(cyclic_group(3), scalars(3, 2));
  const CoefficientRing& ring = p.ring->ring();
  p.gamma_at(1, 1) = p.ring->scalar(ring.from_int(2));
  const ParameterCheck check = validate_parameter_set(p);
  EXPECT_EQ(check.failure, ParameterCheck::Failure::cocycle_identity);
  EXPECT_EQ(check.witness.size(), 3u);
  EXPECT_THROW(build_crossed_product(p), InvalidInput);
  // The unvalidated table exposes the same defect as a failure of associativity.
  EXPECT_THROW(crossed_product_algebra(p), AssociativityViolation);
}

TEST(ParameterSet, NonUnitGammaAndBadAlpha) {
  ParameterSet p = trivial_parameter_set(cyclic_group(2), scalars(3, 2));
  p.gamma_at(1, 1) = p.ring->scalar(p.ring->ring().from_int(3));
  EXPECT_EQ(validate_parameter_set(p).failure, ParameterCheck::Failure::gamma_not_unit);

  ParameterSet q = trivial_parameter_set(cyclic_group(2), split_pair(CoefficientRing(3, 1)));
  Matrix swap(2, 2);
  swap.at(0, 1) = swap.at(1, 0) = q.ring->ring().one();
  q.alpha[1] = swap;
  EXPECT_TRUE(validate_parameter_set(q).ok());
  Matrix degenerate(2, 2);
  degenerate.at(0, 0) = degenerate.at(1, 0) = q.ring->ring().one();
  q.alpha[1] = degenerate;
  EXPECT_EQ(validate_parameter_set(q).failure, ParameterCheck::Failure::alpha_not_automorphism);
}

TEST(ParameterSet, ActionIdentityFailure) {
  // On C_3 the action must satisfy alpha_g^3 = id; a swap of the two idempotents does not.
  ParameterSet p = trivial_parameter_set(cyclic_group(3), split_pair(CoefficientRing(2, 1)));
  Matrix swap(2, 2);
  swap.at(0, 1) = swap.at(1, 0) = p.ring->ring().one();
  p.alpha[1] = swap;
  p.alpha[2] = swap;
  EXPECT_EQ(validate_parameter_set(p).failure, ParameterCheck::Failure::action_identity);
}

TEST(GroupAlgebraParameters, ReconstructS3AndC4) {
  const CoefficientRing r3(3, 2);
  const auto s3 = group_algebra_parameter_set(symmetric_group_3(), {0, 3, 4}, r3);
  ASSERT_TRUE(validate_parameter_set(s3.parameters).ok());
  const CrossedProduct g = build_crossed_product(s3.parameters);
  EXPECT_TRUE(check_algebra_map(*g.algebra, *group_algebra(symmetric_group_3(), r3), s3.isomorphism).ok());

  const CoefficientRing r2(2, 2);
  const auto c4 = group_algebra_parameter_set(cyclic_group(4), {0, 2}, r2);
  ASSERT_TRUE(validate_parameter_set(c4.parameters).ok());
  EXPECT_NE(c4.parameters.gamma_at(1, 1), c4.parameters.ring->identity());
  const CrossedProduct h = build_crossed_product(c4.parameters);
  EXPECT_TRUE(check_algebra_map(*h.algebra, *group_algebra(cyclic_group(4), r2), c4.isomorphism).ok());
  EXPECT_THROW(group_algebra_parameter_set(symmetric_group_3(), {0, 1}, r3), NotNormal);
}

TEST(CrossedProduct, EmbeddingAndHomogeneousUnits) {
  const ParameterSet p = s3_over_a3();
  const CrossedProduct g = build_crossed_product(p);
  const Algebra& R = *p.ring;
  EXPECT_EQ(g.embed(R.identity()), g.algebra->identity());
  const Element x = R.add(R.basis(1), R.identity());
  const Element y = R.basis(2);
  EXPECT_EQ(g.algebra->multiply(g.embed(x), g.embed(y)), g.embed(R.multiply(x, y)));
  EXPECT_EQ(g.degree_one_preimage(g.embed(x)), x);
  EXPECT_THROW(g.degree_one_preimage(g.units[1]), InvalidInput);
  for (const auto& u : g.units) EXPECT_TRUE(g.algebra->is_unit(u));
}

TEST(Equivalence, TransformPreservesValidityAndGivesGradedIsomorphisms) {
  const ParameterSet p = s3_over_a3();
  const Algebra& R = *p.ring;
  const CoefficientRing& ring = R.ring();
  const EquivalenceWitness r = {R.scale(ring.from_int(2), R.basis(2)),
                                R.add(R.basis(1), R.scale(ring.from_int(3), R.basis(2)))};
  const ParameterSet q = transform(p, r);
  EXPECT_TRUE(validate_parameter_set(q).ok());
  EXPECT_EQ(transform(q, inverse_witness(p, r)), p);

  const CrossedProduct gp = build_crossed_product(p);
  const CrossedProduct gq = build_crossed_product(q);
  const Matrix iso = equivalence_isomorphism(p, r);
  EXPECT_TRUE(check_algebra_map(*gp.algebra, *gq.algebra, iso).ok());
  EXPECT_TRUE(is_graded_map(gp, gq, iso));

  // The outer actions agree.
  for (std::size_t g = 0; g < 2; ++g) {
    const UnitSearch s = is_inner_equivalent({p.ring, p.alpha[g]}, {q.ring, q.alpha[g]});
    EXPECT_EQ(s.outcome, SearchOutcome::yes);
  }
  EXPECT_THROW(transform(p, {R.identity(), R.zero()}), NotAUnit);
}

TEST(Normalization, IdempotentAndNormalized) {
  ParameterSet p = s3_over_a3();
  const Algebra& R = *p.ring;
  // Scale gamma by a coboundary so that gamma(1,1) != 1.
  p = transform(p, {R.scale(R.ring().from_int(5), R.identity()), R.identity()});
  ASSERT_FALSE(is_normalized(p));
  const Normalization n = normalize(p);
  EXPECT_TRUE(is_normalized(n.parameters));
  EXPECT_EQ(transform(p, n.witness), n.parameters);
  EXPECT_EQ(normalize(n.parameters).parameters, n.parameters);
}

TEST(AutomorphismAction, ConjugatedParametersAreIsomorphic) {
  const CoefficientRing ring(2, 2);
  const auto R = restriction_of_scalars(CoefficientRing(FiniteField(2, 2), 2));
  const auto auts = enumerate_automorphisms(*R);
  ASSERT_EQ(auts.size(), 2u);
  const Matrix& frob = auts[0] == identity_matrix(ring, 2) ? auts[1] : auts[0];

  ParameterSet p = trivial_parameter_set(cyclic_group(2), R);
  p.alpha[1] = frob;
  ASSERT_TRUE(validate_parameter_set(p).ok());
  const ParameterSet q = act_by_automorphism(p, frob);
  EXPECT_TRUE(validate_parameter_set(q).ok());
  const Matrix iso = action_isomorphism(p, frob);
  const CrossedProduct gp = build_crossed_product(p);
  const CrossedProduct gq = build_crossed_product(q);
  EXPECT_TRUE(check_algebra_map(*gp.algebra, *gq.algebra, iso).ok());
  EXPECT_TRUE(is_graded_map(gp, gq, iso));

  // Frobenius is not linear over the Galois ring itself.
  const CoefficientRing big(FiniteField(2, 2), 2);
  const OLinearityData s{{scalar_action_matrix(big, big.teichmuller(big.field().generator()))}};
  const SLinearityCheck check = s_linear_check(p, s);
  EXPECT_FALSE(check.ok);
  EXPECT_EQ(check.witness, std::optional<std::size_t>(1));
  EXPECT_TRUE(s_linear_check(trivial_parameter_set(cyclic_group(2), R), s).ok);
}

TEST(Blocks, RestrictionToACentralIdempotent) {
  const auto R = split_pair(CoefficientRing(3, 2));
  ParameterSet p = trivial_parameter_set(cyclic_group(2), R);
  p.gamma_at(1, 1) = {R->ring().from_int(2), R->ring().one()};
  ASSERT_TRUE(validate_parameter_set(p).ok());
  const Element b = R->basis(0);
  const ParameterSet block = restrict_to_block(p, b);
  EXPECT_EQ(block.ring->rank(), 1u);
  EXPECT_TRUE(validate_parameter_set(block).ok());
  EXPECT_EQ(block.gamma_at(1, 1), block.ring->scalar(R->ring().from_int(2)));
  EXPECT_THROW(restrict_to_block(p, R->scale(R->ring().from_int(2), b)), NotIdempotent);

  ParameterSet swapped = p;
  Matrix swap(2, 2);
  swap.at(0, 1) = swap.at(1, 0) = R->ring().one();
  swapped.alpha[1] = swap;
  swapped.gamma_at(1, 1) = R->identity();
  ASSERT_TRUE(validate_parameter_set(swapped).ok());
  EXPECT_THROW(restrict_to_block(swapped, b), InvalidInput);
}

TEST(Condensation, MatrixRingOverGroupAlgebra) {
  const CoefficientRing ring(3, 2);
  const auto base = scalars(3, 2);
  const MatrixRing m = matrix_ring(base, 2);
  const auto& A = m.algebra;
  const Element one = base->identity();
  const Element w = A->add(m.unit(0, 1, one), m.unit(1, 0, one));
  ParameterSet p{cyclic_group(2), A, {identity_matrix(ring, 4), inner_from_unit(A, w).matrix},
                 {A->identity(), A->identity(), A->identity(), A->scale(ring.from_int(2), A->identity())}};
  ASSERT_TRUE(validate_parameter_set(p).ok());
  const CrossedProduct gamma = build_crossed_product(p);
  const Element e = m.diagonal_idempotents[0];
  const CondensedCrossedProduct c = condense_crossed(gamma, e);
  EXPECT_EQ(c.product.algebra->rank(), 2u);
  EXPECT_TRUE(validate_parameter_set(c.product.parameters).ok());
  const Element ee = gamma.embed(e);
  for (const auto& u : c.adjusted_units) {
    EXPECT_EQ(gamma.algebra->multiply(u, ee), gamma.algebra->multiply(ee, u));
  }
  const Decondensation d = decondense(gamma, c, {m.unit(0, 0, one), m.unit(1, 0, one)},
                                      {m.unit(0, 0, one), m.unit(0, 1, one)});
  EXPECT_TRUE(check_algebra_map(*d.matrices.algebra, *gamma.algebra, d.map).ok());
  EXPECT_THROW(condense_crossed(gamma, w), NotIdempotent);
}

TEST(Enumeration, DeskScaleCounts) {
  EXPECT_EQ(enumerate_crossed_products(scalars(2, 1), cyclic_group(2), {}).classes.size(), 1u);
  EXPECT_EQ(enumerate_crossed_products(scalars(3, 1), cyclic_group(2), {}).classes.size(), 2u);
  EXPECT_EQ(enumerate_crossed_products(scalars(3, 1), cyclic_group(3), {}).classes.size(), 1u);
  const EnumerationReport z9 = enumerate_crossed_products(scalars(3, 2), cyclic_group(2), {});
  EXPECT_EQ(z9.classes.size(), 2u);
  EXPECT_TRUE(z9.pairwise_inequivalent);
  EXPECT_TRUE(z9.coverage_certified);
  std::size_t total = 0;
  for (const auto& c : z9.classes) total += c.orbit_size;
  EXPECT_EQ(total, z9.valid);
  ASSERT_EQ(z9.certificates.size(), 1u);
  EXPECT_EQ(z9.certificates[0].outcome, SearchOutcome::no);
}

TEST(Enumeration, StructuredPathAndItsCertificate) {
  const auto R = scalars(3, 2);
  EnumerationOptions options;
  options.exhaustive = false;
  options.automorphisms = {identity_matrix(R->ring(), 1)};
  EXPECT_THROW(enumerate_crossed_products(R, cyclic_group(2), options, {}, true), IncompleteAutList);
  const EnumerationReport partial = enumerate_crossed_products(R, cyclic_group(2), options);
  EXPECT_FALSE(partial.coverage_certified);
  EXPECT_FALSE(partial.note.empty());
  options.automorphisms_complete = true;
  const EnumerationReport full = enumerate_crossed_products(R, cyclic_group(2), options, {}, true);
  EXPECT_TRUE(full.coverage_certified);
  EXPECT_EQ(full.classes.size(), 2u);
}

TEST(Enumeration, CandidateGuard) {
  Guards g;
  g.max_candidates = 100;
  EXPECT_THROW(enumerate_crossed_products(scalars(3, 2), cyclic_group(2), {}, g), CostGuardExceeded);
}

TEST(WeakEquivalence, FindsTheTransformWitness) {
  const ParameterSet p = s3_over_a3();
  const Algebra& R = *p.ring;
  const ParameterSet q = transform(p, {R.identity(), R.add(R.identity(), R.scale(R.ring().from_int(3), R.basis(1)))});
  Guards g;
  g.max_candidates = 1'000'000;
  const WeakEquivalenceSearch s = weak_equivalence(p, q, {identity_matrix(R.ring(), 3)}, g);
  ASSERT_EQ(s.outcome, SearchOutcome::yes);
  ASSERT_TRUE(s.witness.has_value());
  EXPECT_EQ(transform(act_by_automorphism(p, *s.tau), *s.witness), q);
}

}  // namespace
