#include "wittorders/witt.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <utility>

#include "wittorders/errors.hpp"

namespace wittorders {

namespace {

using Monomial = std::vector<std::uint32_t>;
// Integer polynomial with coefficients modulo a fixed modulus.
using IntPoly = std::map<Monomial, std::uint64_t>;

struct PolyArith {
  std::uint64_t modulus;
  std::uint64_t max_terms;

  std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) const {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % modulus);
  }

  void guard(const IntPoly& a) const {
    if (a.size() > max_terms) {
      throw CostGuardExceeded("Witt polynomial expansion exceeded " + std::to_string(max_terms) +
                              " monomials");
    }
  }

  void accumulate(IntPoly& into, const Monomial& m, std::uint64_t c) const {
    if (c == 0) return;
    auto [it, inserted] = into.try_emplace(m, c);
    if (!inserted) {
      it->second = (it->second + c) % modulus;
      if (it->second == 0) into.erase(it);
    }
  }

  IntPoly add(const IntPoly& a, const IntPoly& b) const {
    IntPoly r = a;
    for (const auto& [m, c] : b) accumulate(r, m, c);
    guard(r);
    return r;
  }

  IntPoly scale(const IntPoly& a, std::uint64_t s) const {
    IntPoly r;
    for (const auto& [m, c] : a) {
      const std::uint64_t v = mulmod(c, s % modulus);
      if (v != 0) r.emplace(m, v);
    }
    return r;
  }

  IntPoly sub(const IntPoly& a, const IntPoly& b) const {
    return add(a, scale(b, modulus - 1));
  }

  IntPoly mul(const IntPoly& a, const IntPoly& b) const {
    IntPoly r;
    for (const auto& [ma, ca] : a) {
      for (const auto& [mb, cb] : b) {
        Monomial m(ma.size());
        for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
        accumulate(r, m, mulmod(ca, cb));
      }
      guard(r);
    }
    return r;
  }

  IntPoly pow(IntPoly base, std::uint64_t e, std::size_t vars) const {
    IntPoly result;
    result.emplace(Monomial(vars, 0), 1 % modulus);
    while (e != 0) {
      if (e & 1U) result = mul(result, base);
      e >>= 1U;
      if (e != 0) base = mul(base, base);
    }
    return result;
  }
};

std::uint64_t ipow(std::uint64_t base, std::size_t e) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < e; ++i) r *= base;
  return r;
}

// Ghost component w_k(Z) = sum_{i<=k} p^i Z_i^{p^{k-i}} for Z = X (offset 0)
// or Y (offset n).
IntPoly ghost(const PolyArith& arith, std::uint64_t p, std::size_t k, std::size_t offset,
              std::size_t vars) {
  IntPoly r;
  for (std::size_t i = 0; i <= k; ++i) {
    Monomial m(vars, 0);
    m[offset + i] = static_cast<std::uint32_t>(ipow(p, k - i));
    arith.accumulate(r, m, ipow(p, i) % arith.modulus);
  }
  return r;
}

WittPolynomial reduce_mod_p(const IntPoly& a, std::uint64_t p) {
  WittPolynomial r;
  for (const auto& [m, c] : a) {
    if (c % p != 0) r.terms.push_back({m, c % p});
  }
  return r;
}

// Divides every coefficient by p^k (exact) and returns the polynomial mod p^n.
IntPoly divide_exact(const IntPoly& a, std::uint64_t pk) {
  IntPoly r;
  for (const auto& [m, c] : a) {
    if (c % pk != 0) throw Error("internal: ghost recursion produced a non-divisible coefficient");
    if (c / pk != 0) r.emplace(m, c / pk);
  }
  return r;
}

}  // namespace

std::uint64_t WittPolynomial::coefficient(const std::vector<std::uint32_t>& exponents) const {
  for (const auto& t : terms) {
    if (t.exponents == exponents) return t.coefficient;
  }
  return 0;
}

std::size_t WittPolynomial::max_variable_index() const {
  std::size_t best = 0;
  for (const auto& t : terms) {
    const std::size_t n = t.exponents.size() / 2;
    for (std::size_t i = 0; i < t.exponents.size(); ++i) {
      if (t.exponents[i] != 0) best = std::max(best, i % n);
    }
  }
  return best;
}

std::size_t WittPolynomialTable::total_terms() const {
  std::size_t total = 0;
  for (const auto& s : sigma) total += s.size();
  for (const auto& m : mu) total += m.size();
  return total;
}

WittPolynomialTable gen_witt_polys(std::uint64_t p, std::size_t n, std::uint64_t max_monomials) {
  if (!is_prime(p)) throw InvalidInput("Witt polynomials need a prime p");
  if (n == 0) throw InvalidInput("Witt length must be at least 1");
  // p^n must leave room for 128-bit products reduced mod p^n.
  unsigned __int128 modulus = 1;
  for (std::size_t i = 0; i < n; ++i) {
    modulus *= p;
    if (modulus > (static_cast<unsigned __int128>(1) << 62)) {
      throw CostGuardExceeded("p^n too large for Witt polynomial generation");
    }
  }
  const PolyArith arith{static_cast<std::uint64_t>(modulus), max_monomials};
  const std::size_t vars = 2 * n;

  std::vector<IntPoly> sums;
  std::vector<IntPoly> prods;
  WittPolynomialTable table;
  table.p = p;
  table.n = n;
  for (std::size_t k = 0; k < n; ++k) {
    const IntPoly wx = ghost(arith, p, k, 0, vars);
    const IntPoly wy = ghost(arith, p, k, n, vars);
    IntPoly sum_rhs = arith.add(wx, wy);
    IntPoly prod_rhs = arith.mul(wx, wy);
    for (std::size_t i = 0; i < k; ++i) {
      const std::uint64_t exponent = ipow(p, k - i);
      const std::uint64_t weight = ipow(p, i);
      sum_rhs = arith.sub(sum_rhs, arith.scale(arith.pow(sums[i], exponent, vars), weight));
      prod_rhs = arith.sub(prod_rhs, arith.scale(arith.pow(prods[i], exponent, vars), weight));
    }
    sums.push_back(divide_exact(sum_rhs, ipow(p, k)));
    prods.push_back(divide_exact(prod_rhs, ipow(p, k)));
    table.sigma.push_back(reduce_mod_p(sums.back(), p));
    table.mu.push_back(reduce_mod_p(prods.back(), p));
  }
  if (table.total_terms() > max_monomials) {
    throw CostGuardExceeded("Witt polynomial table exceeds the monomial guard");
  }
  return table;
}

std::shared_ptr<const WittPolynomialTable> witt_polys_cached(std::uint64_t p, std::size_t n,
                                                             std::uint64_t max_monomials) {
  static std::shared_mutex mutex;
  static std::map<std::pair<std::uint64_t, std::size_t>,
                  std::shared_ptr<const WittPolynomialTable>>
      cache;
  const auto key = std::make_pair(p, n);
  {
    std::shared_lock lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) {
      // The guard applies to cached tables too, so results do not depend on call history.
      if (it->second->total_terms() > max_monomials) {
        throw CostGuardExceeded("Witt polynomial table exceeds max-monomials");
      }
      return it->second;
    }
  }
  auto table = std::make_shared<const WittPolynomialTable>(gen_witt_polys(p, n, max_monomials));
  std::unique_lock lock(mutex);
  // First writer wins; later writers get the stored table.
  auto [it, inserted] = cache.emplace(key, std::move(table));
  return it->second;
}

WittRing::WittRing(FiniteField field, std::size_t n, std::uint64_t max_monomials)
    : field_(std::move(field)), n_(n), table_(witt_polys_cached(field_.p(), n, max_monomials)) {}

std::uint64_t WittRing::cardinality() const {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < n_; ++i) r *= field_.order();
  return r;
}

WittVector WittRing::zero() const { return {std::vector<FieldElement>(n_, field_.zero())}; }

WittVector WittRing::one() const { return teichmuller(field_.one()); }

WittVector WittRing::teichmuller(const FieldElement& a) const {
  WittVector r = zero();
  r.components[0] = a;
  return r;
}

void WittRing::check(const WittVector& u) const {
  if (u.components.size() != n_) {
    throw RingMismatch("Witt vector of length " + std::to_string(u.components.size()) +
                       " used in W_" + std::to_string(n_));
  }
}

std::vector<FieldElement> WittRing::evaluate(const std::vector<WittPolynomial>& polys,
                                             const WittVector& u, const WittVector& v) const {
  // Power tables per variable, grown lazily to the largest exponent used.
  std::vector<std::vector<FieldElement>> powers(2 * n_);
  for (std::size_t i = 0; i < n_; ++i) {
    powers[i] = {field_.one(), u.components[i]};
    powers[n_ + i] = {field_.one(), v.components[i]};
  }
  auto power = [&](std::size_t var, std::uint32_t e) -> const FieldElement& {
    auto& table = powers[var];
    while (table.size() <= e) table.push_back(field_.mul(table.back(), table[1]));
    return table[e];
  };
  std::vector<FieldElement> out;
  out.reserve(n_);
  for (std::size_t k = 0; k < n_; ++k) {
    FieldElement acc = field_.zero();
    for (const auto& term : polys[k].terms) {
      FieldElement value = field_.from_int(static_cast<std::int64_t>(term.coefficient));
      for (std::size_t var = 0; var < term.exponents.size(); ++var) {
        if (term.exponents[var] != 0) value = field_.mul(value, power(var, term.exponents[var]));
      }
      acc = field_.add(acc, value);
    }
    out.push_back(acc);
  }
  return out;
}

WittVector WittRing::add(const WittVector& u, const WittVector& v) const {
  check(u);
  check(v);
  return {evaluate(table_->sigma, u, v)};
}

WittVector WittRing::mul(const WittVector& u, const WittVector& v) const {
  check(u);
  check(v);
  return {evaluate(table_->mu, u, v)};
}

WittVector WittRing::neg(const WittVector& u) const {
  check(u);
  // sigma_i = X_i + Y_i + (terms in lower indices), so the negative is solved
  // for one component at a time.
  WittVector y = zero();
  for (std::size_t i = 0; i < n_; ++i) {
    const auto partial = evaluate(table_->sigma, u, y);
    y.components[i] = field_.neg(partial[i]);
  }
  return y;
}

WittVector WittRing::sub(const WittVector& u, const WittVector& v) const { return add(u, neg(v)); }

bool WittRing::is_unit(const WittVector& u) const {
  check(u);
  return !field_.is_zero(u.components[0]);
}

WittVector WittRing::inv(const WittVector& u) const {
  if (!is_unit(u)) throw NotAUnit("Witt vector with vanishing 0th component is not a unit");
  const WittVector t = teichmuller(field_.inv(u.components[0]));
  const WittVector base = sub(one(), mul(t, u));
  WittVector sum = zero();
  WittVector term = one();
  for (std::size_t i = 0; i < n_; ++i) {
    sum = add(sum, term);
    term = mul(term, base);
  }
  return mul(t, sum);
}

WittVector WittRing::from_count(std::uint64_t k) const {
  WittVector acc = zero();
  const WittVector unit = one();
  for (std::uint64_t i = 0; i < k; ++i) acc = add(acc, unit);
  return acc;
}

WittVector WittRing::element(std::uint64_t index) const {
  WittVector r = zero();
  for (std::size_t i = 0; i < n_; ++i) {
    r.components[i] = field_.element(index % field_.order());
    index /= field_.order();
  }
  return r;
}

namespace {

std::uint64_t powmod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  base %= m;
  while (e != 0) {
    if (e & 1U) r = static_cast<std::uint64_t>(static_cast<unsigned __int128>(r) * base % m);
    base = static_cast<std::uint64_t>(static_cast<unsigned __int128>(base) * base % m);
    e >>= 1U;
  }
  return r;
}

}  // namespace

std::uint64_t WittRing::padic_oracle(const WittVector& u) const {
  check(u);
  if (field_.degree() != 1) throw InvalidInput("padic_oracle needs a prime base field");
  const std::uint64_t p = field_.p();
  const std::uint64_t pn = ipow(p, n_);
  const std::uint64_t exponent = ipow(p, n_ - 1);
  std::uint64_t total = 0;
  std::uint64_t weight = 1;
  for (std::size_t i = 0; i < n_; ++i) {
    const std::uint64_t lift = powmod(u.components[i].c[0], exponent, pn);
    total = (total + static_cast<std::uint64_t>(static_cast<unsigned __int128>(weight) * lift % pn)) % pn;
    weight *= p;
  }
  return total;
}

WittVector WittRing::from_padic(std::uint64_t value) const {
  if (field_.degree() != 1) throw InvalidInput("from_padic needs a prime base field");
  const std::uint64_t p = field_.p();
  const std::uint64_t pn = ipow(p, n_);
  const std::uint64_t exponent = ipow(p, n_ - 1);
  value %= pn;
  WittVector r = zero();
  for (std::size_t i = 0; i < n_; ++i) {
    const std::uint64_t digit = value % p;
    r.components[i].c[0] = digit;
    const std::uint64_t lift = powmod(digit, exponent, pn);
    value = ((value + pn - lift) % pn) / p;
  }
  return r;
}

}  // namespace wittorders
