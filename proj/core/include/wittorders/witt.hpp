#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <vector>

#include "wittorders/field.hpp"
#include "wittorders/guards.hpp"

namespace wittorders {

// A polynomial with coefficients in F_p in the variables
// X_0..X_{n-1}, Y_0..Y_{n-1}. Exponent vectors have length 2n: the first n
// entries belong to X, the last n to Y.
struct WittPolynomial {
  struct Term {
    std::vector<std::uint32_t> exponents;
    std::uint64_t coefficient;  // in [1, p)
  };
  std::vector<Term> terms;

  std::size_t size() const { return terms.size(); }
  // Coefficient of the given monomial (0 if absent).
  std::uint64_t coefficient(const std::vector<std::uint32_t>& exponents) const;
  // Largest variable index (0-based, within X or Y) occurring with nonzero exponent.
  std::size_t max_variable_index() const;
};

// The universal addition and multiplication polynomials sigma_i, mu_i of the
// p-typical Witt vectors, i < n, reduced mod p.
struct WittPolynomialTable {
  std::uint64_t p = 0;
  std::size_t n = 0;
  std::vector<WittPolynomial> sigma;
  std::vector<WittPolynomial> mu;
  std::size_t total_terms() const;
};

// Computes sigma_i and mu_i through the ghost-component recursion over Z with
// exact division by p^i, carried out modulo p^n (sufficient to recover every
// polynomial mod p). Throws CostGuardExceeded if an intermediate polynomial
// exceeds `max_monomials` terms or p^n overflows 62 bits.
WittPolynomialTable gen_witt_polys(std::uint64_t p, std::size_t n,
                                   std::uint64_t max_monomials = Guards{}.max_monomials);

// Process-wide write-once cache in front of gen_witt_polys. Safe for
// concurrent callers.
std::shared_ptr<const WittPolynomialTable> witt_polys_cached(
    std::uint64_t p, std::size_t n, std::uint64_t max_monomials = Guards{}.max_monomials);

// An element (u_0, ..., u_{n-1}) of W_n(F_q).
struct WittVector {
  std::vector<FieldElement> components;
  auto operator<=>(const WittVector&) const = default;
};

// The ring W_n(F_q) with arithmetic given by the universal polynomials.
class WittRing {
 public:
  WittRing(FiniteField field, std::size_t n,
           std::uint64_t max_monomials = Guards{}.max_monomials);

  const FiniteField& field() const { return field_; }
  std::size_t length() const { return n_; }
  const WittPolynomialTable& polynomials() const { return *table_; }
  std::uint64_t cardinality() const;

  WittVector zero() const;
  WittVector one() const;
  WittVector teichmuller(const FieldElement& a) const;

  WittVector add(const WittVector& u, const WittVector& v) const;
  WittVector mul(const WittVector& u, const WittVector& v) const;
  WittVector neg(const WittVector& u) const;
  WittVector sub(const WittVector& u, const WittVector& v) const;

  bool is_unit(const WittVector& u) const;
  // tau(u_0^-1) * sum_{i<n} (1 - tau(u_0^-1) * u)^i. Throws NotAUnit if u_0 = 0.
  WittVector inv(const WittVector& u) const;

  // k-fold sum of the unit element (k >= 0).
  WittVector from_count(std::uint64_t k) const;

  // Exhaustive enumeration: index in [0, q^n).
  WittVector element(std::uint64_t index) const;

  // Testing oracle for q = p: sum_i p^i * t(u_i) in Z/p^n, where t is the
  // Teichmuller lift a -> a^(p^(n-1)) mod p^n. Throws InvalidInput for q != p.
  std::uint64_t padic_oracle(const WittVector& u) const;
  // Inverse of padic_oracle via Teichmuller digit extraction.
  WittVector from_padic(std::uint64_t value) const;

 private:
  void check(const WittVector& u) const;
  std::vector<FieldElement> evaluate(const std::vector<WittPolynomial>& polys,
                                     const WittVector& u, const WittVector& v) const;

  FiniteField field_;
  std::size_t n_;
  std::shared_ptr<const WittPolynomialTable> table_;
};

}  // namespace wittorders
