#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "wittorders/field.hpp"
#include "wittorders/witt.hpp"

namespace wittorders {

// Element of W_n(F_q) in Galois-ring coordinates: W_n(F_q) is identified with
// (Z/p^n)[x]/(F) where F is the modulus of F_q read over Z. Coordinates are
// integers in [0, p^n); unused trailing coordinates stay zero.
struct Scalar {
  Coords c{};
  auto operator<=>(const Scalar&) const = default;
};

// Ring descriptor {p, deg, modulus, n} with arithmetic on Scalar.
//
// Every element factors as p^v * unit; `valuation` returns v (n for zero).
// The ring is a chain ring, which is what the Howell elimination relies on.
class CoefficientRing {
 public:
  CoefficientRing(FiniteField field, std::size_t n);
  CoefficientRing(std::uint64_t p, std::size_t n) : CoefficientRing(FiniteField::prime(p), n) {}

  const FiniteField& field() const { return field_; }
  std::uint64_t p() const { return field_.p(); }
  std::size_t degree() const { return field_.degree(); }
  std::size_t length() const { return n_; }
  std::uint64_t modulus_value() const { return pn_; }
  std::uint64_t cardinality() const;
  // Same field, shorter length m <= n.
  CoefficientRing truncated(std::size_t m) const;

  Scalar zero() const { return {}; }
  Scalar one() const;
  Scalar from_int(std::int64_t value) const;
  bool is_zero(const Scalar& a) const { return a == Scalar{}; }
  bool is_one(const Scalar& a) const { return a == one(); }

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar pow(Scalar a, std::uint64_t e) const;

  std::size_t valuation(const Scalar& a) const;
  bool is_unit(const Scalar& a) const { return valuation(a) == 0; }
  // Throws NotAUnit.
  Scalar inv(const Scalar& a) const;
  Scalar mul_p_power(const Scalar& a, std::size_t v) const;
  // Requires valuation(a) >= v; returns some c with p^v * c = a (top v
  // coordinates of precision filled with zero digits).
  Scalar div_p_power(const Scalar& a, std::size_t v) const;
  // Representative of a modulo p^v (coordinatewise reduction).
  Scalar mod_p_power(const Scalar& a, std::size_t v) const;
  // Unit part u with a = p^v u (valuation(a) = v < n).
  Scalar unit_part(const Scalar& a) const;

  // Reduction mod p and lifting of residue-field elements to [0, p) coordinates.
  FieldElement residue(const Scalar& a) const;
  Scalar lift(const FieldElement& a) const;
  Scalar teichmuller(const FieldElement& a) const;

  // Image of a Scalar from a ring with the same field and length >= n.
  Scalar truncate_from(const Scalar& a) const { return mod_p_power(a, n_); }

  // Ring isomorphism with the Witt-vector presentation:
  // (x_0, ..., x_{n-1}) <-> sum_i p^i * teichmuller(x_i^(p^-i)).
  Scalar from_witt(const WittVector& w) const;
  WittVector to_witt(const Scalar& a) const;

  // Exhaustive enumeration helpers, index in [0, cardinality()).
  Scalar element(std::uint64_t index) const;

  bool operator==(const CoefficientRing& other) const {
    return field_ == other.field_ && n_ == other.n_;
  }

 private:
  std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) const {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % pn_);
  }

  FiniteField field_;
  std::size_t n_;
  std::uint64_t pn_;
  std::vector<std::uint64_t> ppow_;
};

}  // namespace wittorders
