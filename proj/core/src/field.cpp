#include "wittorders/field.hpp"

#include <string>

#include "wittorders/errors.hpp"

namespace wittorders {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

namespace {

// Polynomials over F_p as coefficient vectors, lowest degree first.
using Poly = std::vector<std::uint64_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint64_t inverse_mod_prime(std::uint64_t a, std::uint64_t p) {
  std::uint64_t result = 1;
  std::uint64_t base = a % p;
  std::uint64_t e = p - 2;
  while (e != 0) {
    if (e & 1U) result = result * base % p;
    base = base * base % p;
    e >>= 1U;
  }
  return result;
}

// Remainder of a modulo b over F_p (b nonzero).
Poly poly_mod(Poly a, const Poly& b, std::uint64_t p) {
  trim(a);
  const std::uint64_t lead_inv = inverse_mod_prime(b.back(), p);
  while (a.size() >= b.size()) {
    const std::uint64_t factor = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) {
      a[shift + i] = (a[shift + i] + p - factor * b[i] % p) % p;
    }
    trim(a);
  }
  return a;
}

// Trial division by all monic polynomials of degree 1..deg/2.
bool irreducible(const Poly& f, std::uint64_t p) {
  const std::size_t deg = f.size() - 1;
  for (std::size_t d = 1; 2 * d <= deg; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      Poly g(d + 1, 0);
      g[d] = 1;
      std::uint64_t rest = idx;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = rest % p;
        rest /= p;
      }
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

// The monic irreducible polynomial of degree deg whose lower coefficients,
// read as base-p digits from the constant term up, form the least integer.
static Poly default_modulus(std::uint64_t p, std::size_t deg) {
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < deg; ++i) count *= p;
  for (std::uint64_t index = 0; index < count; ++index) {
    Poly f(deg + 1);
    std::uint64_t x = index;
    for (std::size_t i = 0; i < deg; ++i) {
      f[i] = x % p;
      x /= p;
    }
    f[deg] = 1;
    if (irreducible(f, p)) return f;
  }
  throw Error("internal: no irreducible polynomial found");
}

FiniteField::FiniteField(std::uint64_t p, std::size_t deg, std::vector<std::uint64_t> modulus)
    : p_(p), deg_(deg), q_(1), modulus_(std::move(modulus)) {
  if (!is_prime(p)) throw InvalidInput("characteristic " + std::to_string(p) + " is not prime");
  if (deg == 0 || deg > kMaxDegree) {
    throw InvalidInput("extension degree must lie in [1, " + std::to_string(kMaxDegree) + "]");
  }
  if (p > (1ULL << 31)) throw InvalidInput("characteristic too large");
  if (modulus_.empty() && deg == 1) modulus_ = {0, 1};
  if (modulus_.empty()) modulus_ = default_modulus(p, deg);
  if (modulus_.size() != deg + 1) {
    throw InvalidInput("modulus must have deg+1 coefficients");
  }
  for (auto& coefficient : modulus_) {
    if (coefficient >= p) throw InvalidInput("modulus coefficient out of range [0, p)");
  }
  if (modulus_.back() != 1) throw InvalidInput("modulus must be monic");
  if (!irreducible(modulus_, p)) throw InvalidInput("modulus is reducible over F_p");
  for (std::size_t i = 0; i < deg; ++i) q_ *= p;
}

FieldElement FiniteField::one() const {
  FieldElement r;
  r.c[0] = deg_ == 1 ? 1 % p_ : 1;
  return r;
}

FieldElement FiniteField::from_int(std::int64_t value) const {
  FieldElement r;
  const auto sp = static_cast<std::int64_t>(p_);
  r.c[0] = static_cast<std::uint64_t>(((value % sp) + sp) % sp);
  return r;
}

FieldElement FiniteField::generator() const {
  FieldElement r;
  if (deg_ == 1) {
    r.c[0] = (p_ - modulus_[0]) % p_;
  } else {
    r.c[1] = 1;
  }
  return r;
}

bool FiniteField::is_zero(const FieldElement& a) const {
  for (std::size_t i = 0; i < deg_; ++i) {
    if (a.c[i] != 0) return false;
  }
  return true;
}

FieldElement FiniteField::add(const FieldElement& a, const FieldElement& b) const {
  FieldElement r;
  for (std::size_t i = 0; i < deg_; ++i) r.c[i] = (a.c[i] + b.c[i]) % p_;
  return r;
}

FieldElement FiniteField::sub(const FieldElement& a, const FieldElement& b) const {
  FieldElement r;
  for (std::size_t i = 0; i < deg_; ++i) r.c[i] = (a.c[i] + p_ - b.c[i]) % p_;
  return r;
}

FieldElement FiniteField::neg(const FieldElement& a) const { return sub(zero(), a); }

FieldElement FiniteField::mul(const FieldElement& a, const FieldElement& b) const {
  if (deg_ == 1) {
    FieldElement r;
    r.c[0] = a.c[0] * b.c[0] % p_;
    return r;
  }
  std::array<std::uint64_t, 2 * kMaxDegree> product{};
  for (std::size_t i = 0; i < deg_; ++i) {
    if (a.c[i] == 0) continue;
    for (std::size_t j = 0; j < deg_; ++j) {
      product[i + j] = (product[i + j] + a.c[i] * b.c[j]) % p_;
    }
  }
  // Reduce using x^deg = -(f_0 + ... + f_{deg-1} x^{deg-1}).
  for (std::size_t k = 2 * deg_ - 2; k >= deg_; --k) {
    const std::uint64_t top = product[k];
    if (top != 0) {
      product[k] = 0;
      for (std::size_t i = 0; i < deg_; ++i) {
        const std::size_t target = k - deg_ + i;
        product[target] = (product[target] + p_ - top * modulus_[i] % p_) % p_;
      }
    }
  }
  FieldElement r;
  for (std::size_t i = 0; i < deg_; ++i) r.c[i] = product[i];
  return r;
}

FieldElement FiniteField::pow(FieldElement a, std::uint64_t e) const {
  FieldElement result = one();
  while (e != 0) {
    if (e & 1U) result = mul(result, a);
    a = mul(a, a);
    e >>= 1U;
  }
  return result;
}

FieldElement FiniteField::inv(const FieldElement& a) const {
  if (is_zero(a)) throw DivisionByZero("inverse of zero in F_q");
  return pow(a, q_ - 2);
}

FieldElement FiniteField::frobenius_inverse(const FieldElement& a) const {
  FieldElement r = a;
  for (std::size_t i = 1; i < deg_; ++i) r = frobenius(r);
  return r;
}

FieldElement FiniteField::element(std::uint64_t index) const {
  FieldElement r;
  for (std::size_t i = 0; i < deg_; ++i) {
    r.c[i] = index % p_;
    index /= p_;
  }
  return r;
}

std::uint64_t FiniteField::index(const FieldElement& a) const {
  std::uint64_t idx = 0;
  for (std::size_t i = deg_; i-- > 0;) idx = idx * p_ + a.c[i];
  return idx;
}

}  // namespace wittorders
