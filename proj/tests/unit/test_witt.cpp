#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "wittorders/coefficient_ring.hpp"
#include "wittorders/errors.hpp"
#include "wittorders/witt.hpp"

using namespace wittorders;

namespace {

struct PrimePower {
  std::uint64_t p;
  std::size_t n;
};

class WittOracle : public ::testing::TestWithParam<PrimePower> {};

TEST_P(WittOracle, PadicMapIsARingIsomorphism) {
  const auto [p, n] = GetParam();
  const WittRing w(FiniteField::prime(p), n);
  const std::uint64_t size = w.cardinality();
  ASSERT_EQ(size, oracle::integer_power(p, n));
  std::set<std::uint64_t> image;
  for (std::uint64_t a = 0; a < size; ++a) {
    const WittVector u = w.element(a);
    const std::uint64_t x = w.padic_oracle(u);
    EXPECT_EQ(x, oracle::witt_to_integer(u, p));
    EXPECT_EQ(w.from_padic(x), u);
    image.insert(x);
    for (std::uint64_t b = 0; b < size; ++b) {
      const WittVector v = w.element(b);
      const std::uint64_t y = oracle::witt_to_integer(v, p);
      ASSERT_EQ(oracle::witt_to_integer(w.add(u, v), p), (x + y) % size);
      ASSERT_EQ(oracle::witt_to_integer(w.mul(u, v), p), x * y % size);
    }
  }
  EXPECT_EQ(image.size(), size);
}

INSTANTIATE_TEST_SUITE_P(SmallPrimePowers, WittOracle,
                         ::testing::Values(PrimePower{2, 2}, PrimePower{2, 3}, PrimePower{3, 2},
                                           PrimePower{3, 3}, PrimePower{5, 2}));

TEST(WittRing, SumOfPOnesIsTheShift) {
  for (std::uint64_t p : {2, 3, 5}) {
    const WittRing w(FiniteField::prime(p), 3);
    const WittVector sum = w.from_count(p);
    ASSERT_EQ(sum.components.size(), 3u);
    EXPECT_EQ(sum.components[0].c[0], 0u);
    EXPECT_EQ(sum.components[1].c[0], 1u);
    EXPECT_EQ(sum.components[2].c[0], 0u);
  }
}

TEST(WittRing, InverseMatchesBruteForce) {
  for (const auto& field : {FiniteField::prime(3), FiniteField::prime(2), FiniteField(2, 2)}) {
    for (std::size_t n : {2u, 3u}) {
      const WittRing w(field, n);
      std::size_t units = 0;
      for (std::uint64_t a = 0; a < w.cardinality(); ++a) {
        const WittVector u = w.element(a);
        std::optional<WittVector> brute;
        for (std::uint64_t b = 0; b < w.cardinality() && !brute; ++b) {
          if (w.mul(u, w.element(b)) == w.one()) brute = w.element(b);
        }
        EXPECT_EQ(w.is_unit(u), brute.has_value());
        if (!brute) {
          EXPECT_THROW(w.inv(u), NotAUnit);
          continue;
        }
        ++units;
        EXPECT_EQ(w.inv(u), *brute);
      }
      // |W_n(F_q)^x| = (q - 1) q^(n-1).
      EXPECT_EQ(units, (field.order() - 1) * oracle::integer_power(field.order(), n - 1));
    }
  }
}

TEST(WittPolynomials, LowDegreeTermsAreTheClassicalOnes) {
  // S_1 = X_1 + Y_1 - sum_{0<k<p} binom(p,k)/p X_0^k Y_0^(p-k).
  const WittPolynomialTable two = gen_witt_polys(2, 2);
  EXPECT_EQ(two.sigma[0].size(), 2u);
  EXPECT_EQ(two.sigma[1].coefficient({0, 1, 0, 0}), 1u);
  EXPECT_EQ(two.sigma[1].coefficient({0, 0, 0, 1}), 1u);
  EXPECT_EQ(two.sigma[1].coefficient({1, 0, 1, 0}), 1u);
  EXPECT_EQ(two.mu[0].coefficient({1, 0, 1, 0}), 1u);

  const WittPolynomialTable three = gen_witt_polys(3, 2);
  EXPECT_EQ(three.sigma[1].coefficient({2, 0, 1, 0}), 2u);
  EXPECT_EQ(three.sigma[1].coefficient({1, 0, 2, 0}), 2u);
  // M_1 = X_0^p Y_1 + X_1 Y_0^p + p X_1 Y_1, and the last term vanishes mod p.
  EXPECT_EQ(three.mu[1].coefficient({3, 0, 0, 1}), 1u);
  EXPECT_EQ(three.mu[1].coefficient({0, 1, 3, 0}), 1u);
  EXPECT_EQ(three.mu[1].size(), 2u);
}

TEST(WittPolynomials, CacheReturnsTheSameTable) {
  const auto a = witt_polys_cached(3, 3);
  const auto b = witt_polys_cached(3, 3);
  EXPECT_EQ(a.get(), b.get());
}

TEST(WittPolynomials, MonomialGuardIsEnforced) {
  EXPECT_THROW(gen_witt_polys(3, 4, 10), CostGuardExceeded);
}

TEST(WittRing, AxiomsHoldOnSamplesOverF4) {
  const WittRing w(FiniteField(2, 2), 2);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::uint64_t> pick(0, w.cardinality() - 1);
  for (int trial = 0; trial < 500; ++trial) {
    const WittVector a = w.element(pick(rng));
    const WittVector b = w.element(pick(rng));
    const WittVector c = w.element(pick(rng));
    EXPECT_EQ(w.add(a, b), w.add(b, a));
    EXPECT_EQ(w.mul(a, b), w.mul(b, a));
    EXPECT_EQ(w.mul(w.mul(a, b), c), w.mul(a, w.mul(b, c)));
    EXPECT_EQ(w.add(w.add(a, b), c), w.add(a, w.add(b, c)));
    EXPECT_EQ(w.mul(a, w.add(b, c)), w.add(w.mul(a, b), w.mul(a, c)));
    EXPECT_EQ(w.add(a, w.neg(a)), w.zero());
  }
}

TEST(WittRing, TeichmullerIsMultiplicative) {
  const WittRing w(FiniteField(3, 2), 2);
  const FiniteField& f = w.field();
  for (std::uint64_t a = 0; a < f.order(); ++a) {
    for (std::uint64_t b = 0; b < f.order(); ++b) {
      EXPECT_EQ(w.mul(w.teichmuller(f.element(a)), w.teichmuller(f.element(b))),
                w.teichmuller(f.mul(f.element(a), f.element(b))));
    }
  }
}

TEST(FiniteField, F4TableAndGenerator) {
  const FiniteField f(2, 2);
  ASSERT_EQ(f.order(), 4u);
  const FieldElement g = f.generator();
  EXPECT_NE(g, f.one());
  EXPECT_EQ(f.pow(g, 3), f.one());
  // The non-trivial elements are 1, g, g^2 and g^2 = g + 1.
  EXPECT_EQ(f.mul(g, g), f.add(g, f.one()));
  for (std::uint64_t a = 1; a < 4; ++a) {
    EXPECT_EQ(f.mul(f.element(a), f.inv(f.element(a))), f.one());
    EXPECT_EQ(f.frobenius_inverse(f.frobenius(f.element(a))), f.element(a));
  }
  EXPECT_THROW(FiniteField(4, 1), InvalidInput);
  EXPECT_THROW(FiniteField(2, 2, {1, 0, 1}), InvalidInput);
}

TEST(GaloisRing, WittPresentationIsIsomorphicOverF4) {
  const FiniteField f(2, 2);
  const WittRing w(f, 2);
  const CoefficientRing r(f, 2);
  for (std::uint64_t a = 0; a < w.cardinality(); ++a) {
    const WittVector u = w.element(a);
    const Scalar x = r.from_witt(u);
    ASSERT_EQ(r.to_witt(x), u);
    for (std::uint64_t b = 0; b < w.cardinality(); ++b) {
      const WittVector v = w.element(b);
      const Scalar y = r.from_witt(v);
      ASSERT_EQ(r.from_witt(w.add(u, v)), r.add(x, y));
      ASSERT_EQ(r.from_witt(w.mul(u, v)), r.mul(x, y));
    }
  }
}

TEST(CoefficientRing, ValuationsInversesAndTruncation) {
  const CoefficientRing r(3, 3);
  EXPECT_EQ(r.modulus_value(), 27u);
  EXPECT_EQ(r.valuation(r.from_int(18)), 2u);
  EXPECT_EQ(r.valuation(r.zero()), 3u);
  EXPECT_EQ(r.mul(r.inv(r.from_int(5)), r.from_int(5)), r.one());
  EXPECT_THROW(r.inv(r.from_int(6)), NotAUnit);
  EXPECT_EQ(r.div_p_power(r.from_int(18), 2), r.from_int(2));
  const CoefficientRing s = r.truncated(1);
  EXPECT_EQ(s.truncate_from(r.from_int(20)), s.from_int(2));
  EXPECT_THROW(r.truncated(4), InvalidInput);
}

TEST(CoefficientRing, TeichmullerRootsOfUnity) {
  const CoefficientRing r(FiniteField(2, 2), 3);
  for (std::uint64_t a = 1; a < 4; ++a) {
    const Scalar t = r.teichmuller(r.field().element(a));
    EXPECT_EQ(r.pow(t, 3), r.one());
  }
}

}  // namespace
