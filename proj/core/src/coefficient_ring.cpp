#include "wittorders/coefficient_ring.hpp"

#include <string>

#include "wittorders/errors.hpp"

namespace wittorders {

CoefficientRing::CoefficientRing(FiniteField field, std::size_t n)
    : field_(std::move(field)), n_(n), pn_(1) {
  if (n == 0) throw InvalidInput("coefficient ring length must be at least 1");
  ppow_.push_back(1);
  for (std::size_t i = 0; i < n; ++i) {
    if (pn_ > (1ULL << 40) / field_.p()) {
      throw InvalidInput("p^n exceeds the supported coefficient range");
    }
    pn_ *= field_.p();
    ppow_.push_back(pn_);
  }
}

std::uint64_t CoefficientRing::cardinality() const {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < degree(); ++i) r *= pn_;
  return r;
}

CoefficientRing CoefficientRing::truncated(std::size_t m) const {
  if (m == 0 || m > n_) {
    throw InvalidInput("cannot truncate W_" + std::to_string(n_) + " to length " +
                       std::to_string(m));
  }
  return CoefficientRing(field_, m);
}

Scalar CoefficientRing::one() const {
  Scalar r;
  r.c[0] = 1 % pn_;
  return r;
}

Scalar CoefficientRing::from_int(std::int64_t value) const {
  Scalar r;
  const auto m = static_cast<std::int64_t>(pn_);
  r.c[0] = static_cast<std::uint64_t>(((value % m) + m) % m);
  return r;
}

Scalar CoefficientRing::add(const Scalar& a, const Scalar& b) const {
  Scalar r;
  for (std::size_t i = 0; i < degree(); ++i) {
    const std::uint64_t s = a.c[i] + b.c[i];
    r.c[i] = s >= pn_ ? s - pn_ : s;
  }
  return r;
}

Scalar CoefficientRing::sub(const Scalar& a, const Scalar& b) const {
  Scalar r;
  for (std::size_t i = 0; i < degree(); ++i) {
    r.c[i] = a.c[i] >= b.c[i] ? a.c[i] - b.c[i] : a.c[i] + pn_ - b.c[i];
  }
  return r;
}

Scalar CoefficientRing::neg(const Scalar& a) const { return sub(Scalar{}, a); }

Scalar CoefficientRing::mul(const Scalar& a, const Scalar& b) const {
  const std::size_t d = degree();
  if (d == 1) {
    Scalar r;
    r.c[0] = mulmod(a.c[0], b.c[0]);
    return r;
  }
  std::array<std::uint64_t, 2 * kMaxDegree> product{};
  for (std::size_t i = 0; i < d; ++i) {
    if (a.c[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      product[i + j] = (product[i + j] + mulmod(a.c[i], b.c[j])) % pn_;
    }
  }
  const auto& f = field_.modulus();
  for (std::size_t k = 2 * d - 2; k >= d; --k) {
    const std::uint64_t top = product[k];
    if (top == 0) continue;
    product[k] = 0;
    for (std::size_t i = 0; i < d; ++i) {
      const std::size_t target = k - d + i;
      product[target] = (product[target] + pn_ - mulmod(top, f[i])) % pn_;
    }
  }
  Scalar r;
  for (std::size_t i = 0; i < d; ++i) r.c[i] = product[i];
  return r;
}

Scalar CoefficientRing::pow(Scalar a, std::uint64_t e) const {
  Scalar result = one();
  while (e != 0) {
    if (e & 1U) result = mul(result, a);
    e >>= 1U;
    if (e != 0) a = mul(a, a);
  }
  return result;
}

std::size_t CoefficientRing::valuation(const Scalar& a) const {
  std::size_t best = n_;
  for (std::size_t i = 0; i < degree(); ++i) {
    std::uint64_t x = a.c[i];
    if (x == 0) continue;
    std::size_t v = 0;
    while (x % field_.p() == 0) {
      x /= field_.p();
      ++v;
    }
    if (v < best) best = v;
  }
  return best;
}

Scalar CoefficientRing::inv(const Scalar& a) const {
  if (!is_unit(a)) throw NotAUnit("scalar is divisible by p");
  // Invert the residue, then Newton iteration y <- y (2 - a y), doubling precision.
  Scalar y = lift(field_.inv(residue(a)));
  const Scalar two = from_int(2);
  for (std::size_t precision = 1; precision < n_; precision *= 2) {
    y = mul(y, sub(two, mul(a, y)));
  }
  return y;
}

Scalar CoefficientRing::mul_p_power(const Scalar& a, std::size_t v) const {
  if (v >= n_) return {};
  Scalar r;
  for (std::size_t i = 0; i < degree(); ++i) r.c[i] = mulmod(a.c[i], ppow_[v]);
  return r;
}

Scalar CoefficientRing::div_p_power(const Scalar& a, std::size_t v) const {
  if (v == 0) return a;
  if (valuation(a) < v) throw Error("internal: division by p^v of an element of lower valuation");
  Scalar r;
  const std::uint64_t divisor = v >= n_ ? pn_ : ppow_[v];
  for (std::size_t i = 0; i < degree(); ++i) r.c[i] = a.c[i] / divisor;
  return r;
}

Scalar CoefficientRing::mod_p_power(const Scalar& a, std::size_t v) const {
  if (v >= n_) {
    Scalar r;
    for (std::size_t i = 0; i < degree(); ++i) r.c[i] = a.c[i] % pn_;
    return r;
  }
  Scalar r;
  for (std::size_t i = 0; i < degree(); ++i) r.c[i] = a.c[i] % ppow_[v];
  return r;
}

Scalar CoefficientRing::unit_part(const Scalar& a) const { return div_p_power(a, valuation(a)); }

FieldElement CoefficientRing::residue(const Scalar& a) const {
  FieldElement r;
  for (std::size_t i = 0; i < degree(); ++i) r.c[i] = a.c[i] % field_.p();
  return r;
}

Scalar CoefficientRing::lift(const FieldElement& a) const {
  Scalar r;
  for (std::size_t i = 0; i < degree(); ++i) r.c[i] = a.c[i];
  return r;
}

Scalar CoefficientRing::teichmuller(const FieldElement& a) const {
  // a~^(q^(n-1)) is independent of the chosen lift a~.
  Scalar t = lift(a);
  for (std::size_t i = 0; i + 1 < n_; ++i) t = pow(t, field_.order());
  return t;
}

Scalar CoefficientRing::from_witt(const WittVector& w) const {
  if (w.components.size() != n_) throw RingMismatch("Witt vector length does not match ring");
  Scalar total;
  for (std::size_t i = 0; i < n_; ++i) {
    FieldElement root = w.components[i];
    for (std::size_t k = 0; k < i; ++k) root = field_.frobenius_inverse(root);
    total = add(total, mul_p_power(teichmuller(root), i));
  }
  return total;
}

WittVector CoefficientRing::to_witt(const Scalar& a) const {
  WittVector w;
  w.components.reserve(n_);
  Scalar rest = a;
  for (std::size_t i = 0; i < n_; ++i) {
    const FieldElement digit = residue(rest);
    FieldElement component = digit;
    for (std::size_t k = 0; k < i; ++k) component = field_.frobenius(component);
    w.components.push_back(component);
    rest = sub(rest, teichmuller(digit));
    // rest is divisible by p; shifting loses the (unused) top digit.
    Scalar shifted;
    for (std::size_t j = 0; j < degree(); ++j) shifted.c[j] = rest.c[j] / field_.p();
    rest = shifted;
  }
  return w;
}

Scalar CoefficientRing::element(std::uint64_t index) const {
  Scalar r;
  for (std::size_t i = 0; i < degree(); ++i) {
    r.c[i] = index % pn_;
    index /= pn_;
  }
  return r;
}

}  // namespace wittorders
