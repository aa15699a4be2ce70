#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace wittorders {

// Largest supported extension degree of the residue field F_q over F_p.
inline constexpr std::size_t kMaxDegree = 4;

using Coords = std::array<std::uint64_t, kMaxDegree>;

// Element of F_q = F_p[x]/(f): coordinates with respect to 1, x, ..., x^(deg-1).
// Unused trailing coordinates are always zero.
struct FieldElement {
  Coords c{};
  auto operator<=>(const FieldElement&) const = default;
};

// F_q presented by an explicit monic irreducible polynomial over F_p.
class FiniteField {
 public:
  // `modulus` holds the coefficients of f from the constant term up, with a
  // leading 1 (deg+1 entries). An empty modulus selects x for deg = 1 and
  // otherwise the first irreducible f in the order of its coefficient digits
  // (x^2 + x + 1 over F_2, x^2 + 1 over F_3).
  // Throws InvalidInput if p is not prime or f is reducible.
  FiniteField(std::uint64_t p, std::size_t deg, std::vector<std::uint64_t> modulus = {});

  static FiniteField prime(std::uint64_t p) { return FiniteField(p, 1); }

  std::uint64_t p() const { return p_; }
  std::size_t degree() const { return deg_; }
  std::uint64_t order() const { return q_; }
  const std::vector<std::uint64_t>& modulus() const { return modulus_; }

  FieldElement zero() const { return {}; }
  FieldElement one() const;
  FieldElement from_int(std::int64_t value) const;
  // The class of x (the generator); equals from_int(0) only for deg = 1, where
  // x = 0 modulo f = x.
  FieldElement generator() const;

  bool is_zero(const FieldElement& a) const;

  FieldElement add(const FieldElement& a, const FieldElement& b) const;
  FieldElement sub(const FieldElement& a, const FieldElement& b) const;
  FieldElement neg(const FieldElement& a) const;
  FieldElement mul(const FieldElement& a, const FieldElement& b) const;
  FieldElement pow(FieldElement a, std::uint64_t e) const;
  // Throws DivisionByZero for a = 0.
  FieldElement inv(const FieldElement& a) const;
  FieldElement frobenius(const FieldElement& a) const { return pow(a, p_); }
  // Inverse Frobenius a^(p^(deg-1)).
  FieldElement frobenius_inverse(const FieldElement& a) const;

  // Enumeration order used by exhaustive scans: index -> element, base-p digits.
  FieldElement element(std::uint64_t index) const;
  std::uint64_t index(const FieldElement& a) const;

  bool operator==(const FiniteField& other) const {
    return p_ == other.p_ && deg_ == other.deg_ && modulus_ == other.modulus_;
  }

 private:
  std::uint64_t p_;
  std::size_t deg_;
  std::uint64_t q_;
  std::vector<std::uint64_t> modulus_;
};

bool is_prime(std::uint64_t n);

}  // namespace wittorders
