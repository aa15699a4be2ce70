#include "wittorders/crossed.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "wittorders/errors.hpp"

namespace wittorders {

namespace {

Matrix inner_matrix(const AlgebraPtr& ring, const Element& u) {
  return inner_from_unit(ring, u).matrix;
}

Element apply(const Algebra& ring, const Matrix& m, const Element& x) {
  return vecmat(ring.ring(), x, m);
}

void check_shape(const ParameterSet& p) {
  const std::size_t m = p.group.order();
  const std::size_t r = p.ring->rank();
  if (p.alpha.size() != m || p.gamma.size() != m * m) {
    throw DimensionMismatch("parameter set does not match the group order");
  }
  for (const auto& a : p.alpha) {
    if (a.rows != r || a.cols != r) throw DimensionMismatch("alpha matrix has wrong shape");
  }
  for (const auto& g : p.gamma) p.ring->check(g);
}

// Mixed-radix counter over `sizes`; returns false after the last tuple.
bool advance(std::vector<std::size_t>& digits, const std::vector<std::size_t>& sizes) {
  for (std::size_t k = 0; k < digits.size(); ++k) {
    if (++digits[k] < sizes[k]) return true;
    digits[k] = 0;
  }
  return false;
}

std::uint64_t saturating_power(std::uint64_t base, std::size_t exponent, std::uint64_t cap) {
  std::uint64_t total = 1;
  for (std::size_t k = 0; k < exponent; ++k) {
    if (base != 0 && total > cap / base) return cap + 1;
    total *= base;
  }
  return total;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

std::vector<std::uint64_t> ParameterSet::key() const {
  std::vector<std::uint64_t> k;
  for (const auto& a : alpha) {
    for (const auto& x : a.data) k.insert(k.end(), x.c.begin(), x.c.end());
  }
  for (const auto& g : gamma) {
    for (const auto& x : g) k.insert(k.end(), x.c.begin(), x.c.end());
  }
  return k;
}

ParameterSet trivial_parameter_set(const GroupTable& group, const AlgebraPtr& ring) {
  const std::size_t m = group.order();
  ParameterSet p{group, ring, {}, {}};
  p.alpha.assign(m, identity_matrix(ring->ring(), ring->rank()));
  p.gamma.assign(m * m, ring->identity());
  return p;
}

std::string ParameterCheck::describe() const {
  auto list = [this] {
    std::string s;
    for (std::size_t k = 0; k < witness.size(); ++k) s += (k ? ", " : "") + std::to_string(witness[k]);
    return "(" + s + ")";
  };
  switch (failure) {
    case Failure::none: return "ok";
    case Failure::alpha_not_automorphism: return "alpha is not an automorphism at " + list();
    case Failure::gamma_not_unit: return "gamma is not a unit at " + list();
    case Failure::action_identity: return "alpha_g alpha_h != iota_gamma alpha_gh at " + list();
    case Failure::cocycle_identity: return "twisted cocycle identity fails at " + list();
  }
  return "unknown";
}

ParameterCheck validate_parameter_set(const ParameterSet& p) {
  check_shape(p);
  const Algebra& R = *p.ring;
  const std::size_t m = p.group.order();
  ParameterCheck result;
  for (std::size_t g = 0; g < m; ++g) {
    if (!check_automorphism(R, p.alpha[g]).ok()) {
      result.failure = ParameterCheck::Failure::alpha_not_automorphism;
      result.witness = {g};
      return result;
    }
  }
  for (std::size_t g = 0; g < m; ++g) {
    for (std::size_t h = 0; h < m; ++h) {
      if (!R.is_unit(p.gamma_at(g, h))) {
        result.failure = ParameterCheck::Failure::gamma_not_unit;
        result.witness = {g, h};
        return result;
      }
    }
  }
  const CoefficientRing& ring = R.ring();
  for (std::size_t g = 0; g < m; ++g) {
    for (std::size_t h = 0; h < m; ++h) {
      const Matrix lhs = matmul(ring, p.alpha[h], p.alpha[g]);
      const Matrix rhs =
          matmul(ring, p.alpha[p.group.mul(g, h)], inner_matrix(p.ring, p.gamma_at(g, h)));
      if (lhs != rhs) {
        result.failure = ParameterCheck::Failure::action_identity;
        result.witness = {g, h};
        return result;
      }
    }
  }
  for (std::size_t g = 0; g < m; ++g) {
    for (std::size_t h = 0; h < m; ++h) {
      for (std::size_t k = 0; k < m; ++k) {
        const Element lhs = R.multiply(p.gamma_at(g, h), p.gamma_at(p.group.mul(g, h), k));
        const Element rhs = R.multiply(apply(R, p.alpha[g], p.gamma_at(h, k)),
                                       p.gamma_at(g, p.group.mul(h, k)));
        if (lhs != rhs) {
          result.failure = ParameterCheck::Failure::cocycle_identity;
          result.witness = {g, h, k};
          return result;
        }
      }
    }
  }
  return result;
}

ParameterSet transform(const ParameterSet& p, const EquivalenceWitness& r) {
  check_shape(p);
  const Algebra& R = *p.ring;
  const std::size_t m = p.group.order();
  if (r.size() != m) throw DimensionMismatch("equivalence witness needs one unit per group element");
  std::vector<Element> r_inv(m);
  for (std::size_t g = 0; g < m; ++g) r_inv[g] = R.unit_inverse(r[g]);
  ParameterSet q{p.group, p.ring, std::vector<Matrix>(m), std::vector<Element>(m * m)};
  for (std::size_t g = 0; g < m; ++g) {
    q.alpha[g] = matmul(R.ring(), p.alpha[g], inner_matrix(p.ring, r[g]));
  }
  for (std::size_t g = 0; g < m; ++g) {
    for (std::size_t h = 0; h < m; ++h) {
      Element value = R.multiply(r[g], apply(R, p.alpha[g], r[h]));
      value = R.multiply(value, p.gamma_at(g, h));
      q.gamma_at(g, h) = R.multiply(value, r_inv[p.group.mul(g, h)]);
    }
  }
  return q;
}

EquivalenceWitness inverse_witness(const ParameterSet& p, const EquivalenceWitness& w) {
  EquivalenceWitness inv;
  for (const auto& x : w) inv.push_back(p.ring->unit_inverse(x));
  return inv;
}

Normalization normalize(const ParameterSet& p) {
  const std::size_t one = p.group.identity();
  const Element c_inv = p.ring->unit_inverse(p.gamma_at(one, one));
  EquivalenceWitness w(p.group.order(), c_inv);
  return {transform(p, w), w};
}

bool is_normalized(const ParameterSet& p) {
  const std::size_t one = p.group.identity();
  const Element& id = p.ring->identity();
  if (p.alpha[one] != identity_matrix(p.ring->ring(), p.ring->rank())) return false;
  for (std::size_t g = 0; g < p.group.order(); ++g) {
    if (p.gamma_at(one, g) != id || p.gamma_at(g, one) != id) return false;
  }
  return true;
}

ParameterSet act_by_automorphism(const ParameterSet& p, const Matrix& tau) {
  check_shape(p);
  const CoefficientRing& ring = p.ring->ring();
  const Matrix tau_inv = inverse(ring, tau);
  ParameterSet q = p;
  for (auto& a : q.alpha) a = matmul(ring, matmul(ring, tau_inv, a), tau);
  for (auto& g : q.gamma) g = vecmat(ring, g, tau);
  return q;
}

Element CrossedProduct::homogeneous(const Element& x, std::size_t g) const {
  parameters.ring->check(x);
  Element y = algebra->zero();
  const std::size_t r = parameters.ring->rank();
  for (std::size_t i = 0; i < r; ++i) y[index(g, i)] = x[i];
  return y;
}

Element CrossedProduct::embed(const Element& x) const {
  const Algebra& R = *parameters.ring;
  const std::size_t one = parameters.group.identity();
  const Element c_inv = R.unit_inverse(parameters.gamma_at(one, one));
  return homogeneous(R.multiply(x, c_inv), one);
}

Element CrossedProduct::degree_one_preimage(const Element& y) const {
  algebra->check(y);
  const Algebra& R = *parameters.ring;
  const CoefficientRing& ring = R.ring();
  const std::size_t one = parameters.group.identity();
  Element block(R.rank());
  for (std::size_t k = 0; k < y.size(); ++k) {
    if (degree[k] == one) {
      block[k % R.rank()] = y[k];
    } else if (!ring.is_zero(y[k])) {
      throw InvalidInput("element has components outside degree one");
    }
  }
  return R.multiply(block, parameters.gamma_at(one, one));
}

AlgebraPtr crossed_product_algebra(const ParameterSet& p, const Guards& guards) {
  const Algebra& R = *p.ring;
  const std::size_t m = p.group.order();
  const std::size_t r = R.rank();
  const std::size_t rank = m * r;
  if (rank > guards.max_rank) throw CostGuardExceeded("crossed product rank exceeds max-rank");

  std::vector<Scalar> constants(rank * rank * rank);
  for (std::size_t g = 0; g < m; ++g) {
    for (std::size_t h = 0; h < m; ++h) {
      const std::size_t gh = p.group.mul(g, h);
      for (std::size_t j = 0; j < r; ++j) {
        const Element twisted = R.multiply(p.alpha[g].row(j), p.gamma_at(g, h));
        for (std::size_t i = 0; i < r; ++i) {
          const Element value = R.multiply(R.basis(i), twisted);
          const std::size_t left = g * r + i;
          const std::size_t right = h * r + j;
          for (std::size_t v = 0; v < r; ++v) {
            constants[(left * rank + right) * rank + gh * r + v] = value[v];
          }
        }
      }
    }
  }
  const std::size_t one = p.group.identity();
  const Element c_inv = R.unit_inverse(p.gamma_at(one, one));
  Element identity(rank);
  for (std::size_t v = 0; v < r; ++v) identity[one * r + v] = c_inv[v];

  return Algebra::make(R.ring(), rank, std::move(constants), std::move(identity), guards);
}

CrossedProduct build_crossed_product(const ParameterSet& p, const Guards& guards) {
  const ParameterCheck check = validate_parameter_set(p);
  if (!check.ok()) throw InvalidInput("invalid parameter set: " + check.describe());
  const std::size_t m = p.group.order();
  const std::size_t r = p.ring->rank();
  CrossedProduct result;
  result.parameters = p;
  result.algebra = crossed_product_algebra(p, guards);
  for (std::size_t g = 0; g < m; ++g) {
    for (std::size_t i = 0; i < r; ++i) result.degree.push_back(g);
  }
  for (std::size_t g = 0; g < m; ++g) {
    result.units.push_back(result.homogeneous(p.ring->identity(), g));
  }
  return result;
}

bool is_graded_map(const CrossedProduct& source, const CrossedProduct& target, const Matrix& m) {
  if (m.rows != source.algebra->rank() || m.cols != target.algebra->rank()) return false;
  const CoefficientRing& ring = source.algebra->ring();
  for (std::size_t a = 0; a < m.rows; ++a) {
    for (std::size_t b = 0; b < m.cols; ++b) {
      if (!ring.is_zero(m.at(a, b)) && source.degree[a] != target.degree[b]) return false;
    }
  }
  return true;
}

Matrix equivalence_isomorphism(const ParameterSet& p, const EquivalenceWitness& r) {
  const Algebra& R = *p.ring;
  const std::size_t m = p.group.order();
  const std::size_t rank = R.rank();
  Matrix map(m * rank, m * rank);
  for (std::size_t g = 0; g < m; ++g) {
    const Element r_inv = R.unit_inverse(r.at(g));
    for (std::size_t i = 0; i < rank; ++i) {
      const Element image = R.multiply(R.basis(i), r_inv);
      for (std::size_t v = 0; v < rank; ++v) map.at(g * rank + i, g * rank + v) = image[v];
    }
  }
  return map;
}

Matrix action_isomorphism(const ParameterSet& p, const Matrix& tau) {
  const std::size_t m = p.group.order();
  const std::size_t rank = p.ring->rank();
  Matrix map(m * rank, m * rank);
  for (std::size_t g = 0; g < m; ++g) {
    for (std::size_t i = 0; i < rank; ++i) {
      for (std::size_t v = 0; v < rank; ++v) map.at(g * rank + i, g * rank + v) = tau.at(i, v);
    }
  }
  return map;
}

SLinearityCheck s_linear_check(const ParameterSet& p, const OLinearityData& s) {
  const ParameterSet normalized = normalize(p).parameters;
  SLinearityCheck result;
  for (std::size_t g = 0; g < normalized.group.order(); ++g) {
    if (!check_o_linear(p.ring->ring(), normalized.alpha[g], s).ok) {
      result.ok = false;
      result.witness = g;
      return result;
    }
  }
  return result;
}

GroupAlgebraParameters group_algebra_parameter_set(const GroupTable& group,
                                                   const std::vector<std::size_t>& normal,
                                                   const CoefficientRing& ring,
                                                   const Guards& guards) {
  GroupAlgebraParameters out{{}, quotient_group(group, normal), normal, {}};
  std::sort(out.subgroup.begin(), out.subgroup.end());
  out.subgroup.erase(std::unique(out.subgroup.begin(), out.subgroup.end()), out.subgroup.end());
  const auto& sub = out.subgroup;
  const std::size_t r = sub.size();
  std::vector<std::size_t> pos(group.order(), r);
  for (std::size_t a = 0; a < r; ++a) pos[sub[a]] = a;

  std::vector<std::vector<std::size_t>> sub_mult(r, std::vector<std::size_t>(r));
  for (std::size_t a = 0; a < r; ++a) {
    for (std::size_t b = 0; b < r; ++b) sub_mult[a][b] = pos[group.mul(sub[a], sub[b])];
  }
  const AlgebraPtr R = group_algebra(GroupTable(sub_mult), ring, guards);

  const GroupTable& Q = out.quotient.group;
  const auto& rep = out.quotient.representative;
  const std::size_t m = Q.order();
  ParameterSet& p = out.parameters;
  p = ParameterSet{Q, R, std::vector<Matrix>(m), std::vector<Element>(m * m)};
  for (std::size_t x = 0; x < m; ++x) {
    Matrix a(r, r);
    const std::size_t rx = rep[x];
    const std::size_t rx_inv = group.inverse(rx);
    for (std::size_t i = 0; i < r; ++i) {
      a.at(i, pos[group.mul(group.mul(rx, sub[i]), rx_inv)]) = ring.one();
    }
    p.alpha[x] = std::move(a);
  }
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t y = 0; y < m; ++y) {
      const std::size_t value =
          group.mul(group.mul(rep[x], rep[y]), group.inverse(rep[Q.mul(x, y)]));
      p.gamma_at(x, y) = R->basis(pos[value]);
    }
  }
  out.isomorphism = Matrix(m * r, group.order());
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t i = 0; i < r; ++i) {
      out.isomorphism.at(x * r + i, group.mul(sub[i], rep[x])) = ring.one();
    }
  }
  return out;
}

ParameterSet restrict_to_block(const ParameterSet& p, const Element& b, const Guards& guards) {
  check_shape(p);
  const Algebra& R = *p.ring;
  if (!R.is_idempotent(b)) throw NotIdempotent("block idempotent must satisfy b*b = b");
  if (!R.is_central(b)) throw InvalidInput("block idempotent must be central");
  for (std::size_t g = 0; g < p.group.order(); ++g) {
    if (apply(R, p.alpha[g], b) != b) throw InvalidInput("block idempotent is not alpha-stable");
  }
  const Condensation corner = condense(p.ring, b, guards);
  const std::size_t k = corner.corner->rank();
  const std::size_t m = p.group.order();
  ParameterSet q{p.group, corner.corner, std::vector<Matrix>(m), std::vector<Element>(m * m)};
  for (std::size_t g = 0; g < m; ++g) {
    Matrix a(k, k);
    for (std::size_t i = 0; i < k; ++i) {
      a.set_row(i, corner.coordinates(R.ring(), apply(R, p.alpha[g], corner.embedding.row(i))));
    }
    q.alpha[g] = std::move(a);
  }
  for (std::size_t idx = 0; idx < m * m; ++idx) {
    q.gamma[idx] = corner.coordinates(R.ring(), R.multiply(p.gamma[idx], b));
  }
  return q;
}

CondensedCrossedProduct condense_crossed(const CrossedProduct& gamma, const Element& e,
                                         const Guards& guards) {
  const ParameterSet& p = gamma.parameters;
  const AlgebraPtr& Rp = p.ring;
  const Algebra& R = *Rp;
  const Algebra& G = *gamma.algebra;
  const CoefficientRing& ring = R.ring();
  R.check(e);
  if (!R.is_idempotent(e)) throw NotIdempotent("condensation needs e*e = e");
  const std::size_t m = p.group.order();

  CondensedCrossedProduct out;
  out.corner = condense(Rp, e, guards);
  const Element E = gamma.embed(e);

  for (std::size_t g = 0; g < m; ++g) {
    const Element& u = gamma.units[g];
    const Element f = gamma.degree_one_preimage(G.product(G.unit_inverse(u), E, u));
    // x^-1 e x = f  <=>  e x - x f = 0.
    const LinearSystem system(ring, sub(ring, R.left_regular(e), R.right_regular(f)));
    const UnitSearch search = find_unit_in_span(R, system.kernel(), guards);
    if (search.outcome != SearchOutcome::yes) {
      throw ConjugacyWitnessNotFound("no unit x with x^-1 e x = u_g^-1 e u_g for g = " +
                                     std::to_string(g) + " (" + to_string(search.outcome) + ")");
    }
    out.conjugators.push_back(*search.unit);
    Element adjusted = G.multiply(u, gamma.embed(R.unit_inverse(*search.unit)));
    if (G.multiply(adjusted, E) != G.multiply(E, adjusted)) {
      throw Error("internal: adjusted unit does not commute with e");
    }
    out.adjusted_units.push_back(std::move(adjusted));
  }

  const AlgebraPtr& corner = out.corner.corner;
  const std::size_t k = corner->rank();
  std::vector<Element> rho(k);
  for (std::size_t i = 0; i < k; ++i) rho[i] = gamma.embed(out.corner.embedding.row(i));
  std::vector<Element> adjusted_inv(m);
  for (std::size_t g = 0; g < m; ++g) adjusted_inv[g] = G.unit_inverse(out.adjusted_units[g]);

  ParameterSet q{p.group, corner, std::vector<Matrix>(m), std::vector<Element>(m * m)};
  for (std::size_t g = 0; g < m; ++g) {
    Matrix a(k, k);
    for (std::size_t i = 0; i < k; ++i) {
      const Element conj = G.product(out.adjusted_units[g], rho[i], adjusted_inv[g]);
      a.set_row(i, out.corner.coordinates(ring, gamma.degree_one_preimage(conj)));
    }
    q.alpha[g] = std::move(a);
  }
  for (std::size_t g = 0; g < m; ++g) {
    for (std::size_t h = 0; h < m; ++h) {
      const Element w = G.product(out.adjusted_units[g], out.adjusted_units[h],
                                  adjusted_inv[p.group.mul(g, h)]);
      q.gamma_at(g, h) =
          out.corner.coordinates(ring, gamma.degree_one_preimage(G.multiply(E, w)));
    }
  }
  out.product = build_crossed_product(q, guards);

  const std::size_t rank = out.product.algebra->rank();
  out.embedding = Matrix(rank, G.rank());
  for (std::size_t g = 0; g < m; ++g) {
    for (std::size_t i = 0; i < k; ++i) {
      out.embedding.set_row(out.product.index(g, i), G.multiply(rho[i], out.adjusted_units[g]));
    }
  }
  // The embedding must be multiplicative and send the identity to E.
  const Algebra& C = *out.product.algebra;
  if (vecmat(ring, C.identity(), out.embedding) != E) {
    throw Error("internal: condensed identity does not map to e");
  }
  for (std::size_t a = 0; a < rank; ++a) {
    for (std::size_t b = 0; b < rank; ++b) {
      const Element lhs = G.multiply(out.embedding.row(a), out.embedding.row(b));
      const Element rhs = vecmat(ring, C.multiply(C.basis(a), C.basis(b)), out.embedding);
      if (lhs != rhs) throw Error("internal: condensed embedding is not multiplicative");
    }
  }
  return out;
}

Decondensation decondense(const CrossedProduct& gamma, const CondensedCrossedProduct& condensed,
                          const std::vector<Element>& column_units,
                          const std::vector<Element>& row_units, const Guards& guards) {
  const std::size_t size = column_units.size();
  if (size == 0 || row_units.size() != size) {
    throw DimensionMismatch("decondensation needs matching lists of matrix units");
  }
  Decondensation out;
  out.matrices = matrix_ring(condensed.product.algebra, size, guards);
  const Algebra& G = *gamma.algebra;
  const std::size_t k = condensed.product.algebra->rank();
  out.map = Matrix(out.matrices.algebra->rank(), G.rank());
  for (std::size_t a = 0; a < size; ++a) {
    const Element c = gamma.embed(column_units[a]);
    for (std::size_t b = 0; b < size; ++b) {
      const Element d = gamma.embed(row_units[b]);
      for (std::size_t i = 0; i < k; ++i) {
        out.map.set_row(out.matrices.index(a, b, i), G.product(c, condensed.embedding.row(i), d));
      }
    }
  }
  return out;
}

std::vector<std::size_t> matrix_grading(const Decondensation& d, const CrossedProduct& inner) {
  std::vector<std::size_t> grading(d.matrices.algebra->rank());
  for (std::size_t a = 0; a < d.matrices.size; ++a) {
    for (std::size_t b = 0; b < d.matrices.size; ++b) {
      for (std::size_t i = 0; i < d.matrices.inner_rank; ++i) {
        grading[d.matrices.index(a, b, i)] = inner.degree[i];
      }
    }
  }
  return grading;
}

std::vector<Matrix> enumerate_automorphisms(const Algebra& algebra, const Guards& guards) {
  const CoefficientRing& ring = algebra.ring();
  const std::size_t r = algebra.rank();
  std::optional<std::size_t> pinned;
  for (std::size_t i = 0; i < r && !pinned; ++i) {
    if (algebra.identity() == algebra.basis(i)) pinned = i;
  }
  const std::size_t free_entries = (pinned ? r - 1 : r) * r;
  const std::uint64_t size = ring.cardinality();
  const std::uint64_t total = saturating_power(size, free_entries, guards.max_candidates);
  if (total > guards.max_candidates) {
    throw CostGuardExceeded("automorphism enumeration exceeds max-candidates");
  }
  std::vector<Matrix> result;
  Matrix m(r, r);
  for (std::uint64_t index = 0; index < total; ++index) {
    std::uint64_t rest = index;
    for (std::size_t i = 0; i < r; ++i) {
      if (pinned && i == *pinned) {
        m.set_row(i, algebra.identity());
        continue;
      }
      for (std::size_t j = 0; j < r; ++j) {
        m.at(i, j) = ring.element(rest % size);
        rest /= size;
      }
    }
    if (check_automorphism(algebra, m).ok()) result.push_back(m);
  }
  return result;
}

std::vector<Element> enumerate_units(const Algebra& algebra, const Guards& guards) {
  const CoefficientRing& ring = algebra.ring();
  const std::uint64_t size = ring.cardinality();
  const std::uint64_t total = saturating_power(size, algebra.rank(), guards.max_candidates);
  if (total > guards.max_candidates) throw CostGuardExceeded("unit enumeration exceeds max-candidates");
  std::vector<Element> units;
  for (std::uint64_t index = 0; index < total; ++index) {
    Element x(algebra.rank());
    std::uint64_t rest = index;
    for (auto& c : x) {
      c = ring.element(rest % size);
      rest /= size;
    }
    if (algebra.is_unit(x)) units.push_back(std::move(x));
  }
  return units;
}

namespace {

// For each g, the indices u with iota_u o p.alpha_g = q.alpha_g.
std::vector<std::vector<std::size_t>> alpha_compatible_units(const ParameterSet& p,
                                                             const ParameterSet& q,
                                                             const std::vector<Matrix>& inners) {
  const CoefficientRing& ring = p.ring->ring();
  std::vector<std::vector<std::size_t>> options(p.group.order());
  for (std::size_t g = 0; g < p.group.order(); ++g) {
    for (std::size_t u = 0; u < inners.size(); ++u) {
      if (matmul(ring, p.alpha[g], inners[u]) == q.alpha[g]) options[g].push_back(u);
    }
  }
  return options;
}

struct WitnessSearch {
  std::optional<EquivalenceWitness> witness;
  std::uint64_t tested = 0;
  bool exhausted = false;
};

WitnessSearch find_transform(const ParameterSet& p, const ParameterSet& q,
                             const std::vector<Element>& units, const std::vector<Matrix>& inners,
                             std::uint64_t budget) {
  WitnessSearch result;
  const auto options = alpha_compatible_units(p, q, inners);
  std::vector<std::size_t> sizes;
  for (const auto& o : options) {
    if (o.empty()) return result;
    sizes.push_back(o.size());
  }
  std::vector<std::size_t> digits(sizes.size(), 0);
  do {
    if (result.tested >= budget) {
      result.exhausted = true;
      return result;
    }
    ++result.tested;
    EquivalenceWitness w;
    for (std::size_t g = 0; g < digits.size(); ++g) w.push_back(units[options[g][digits[g]]]);
    if (transform(p, w) == q) {
      result.witness = std::move(w);
      return result;
    }
  } while (advance(digits, sizes));
  return result;
}

}  // namespace

WeakEquivalenceSearch weak_equivalence(const ParameterSet& p, const ParameterSet& q,
                                       const std::vector<Matrix>& automorphisms,
                                       const Guards& guards) {
  WeakEquivalenceSearch result;
  const std::vector<Element> units = enumerate_units(*p.ring, guards);
  std::vector<Matrix> inners;
  for (const auto& u : units) inners.push_back(inner_matrix(p.ring, u));
  std::vector<Matrix> taus = automorphisms;
  if (taus.empty()) taus.push_back(identity_matrix(p.ring->ring(), p.ring->rank()));
  for (const auto& tau : taus) {
    const ParameterSet acted = act_by_automorphism(p, tau);
    const WitnessSearch search =
        find_transform(acted, q, units, inners, guards.max_candidates - result.candidates_tested);
    result.candidates_tested += search.tested;
    if (search.witness) {
      result.outcome = SearchOutcome::yes;
      result.tau = tau;
      result.witness = search.witness;
      return result;
    }
    if (search.exhausted) {
      result.outcome = SearchOutcome::inconclusive;
      return result;
    }
  }
  result.outcome = SearchOutcome::no;
  return result;
}

namespace {

std::vector<Matrix> close_under_composition(const CoefficientRing& ring, std::size_t rank,
                                            const std::vector<Matrix>& generators,
                                            const Guards& guards) {
  std::vector<Matrix> group{identity_matrix(ring, rank)};
  std::map<std::vector<Scalar>, bool> seen{{group[0].data, true}};
  for (std::size_t k = 0; k < group.size(); ++k) {
    for (const auto& g : generators) {
      Matrix next = matmul(ring, group[k], g);
      if (seen.emplace(next.data, true).second) {
        group.push_back(std::move(next));
        if (group.size() > guards.max_candidates) {
          throw CostGuardExceeded("automorphism closure exceeds max-candidates");
        }
      }
    }
  }
  return group;
}

// The index-th element of a transversal of p^k W in W, via base-q digits.
Scalar residue_representative(const CoefficientRing& ring, std::uint64_t index, std::size_t k) {
  const std::uint64_t q = ring.field().order();
  Scalar x;
  for (std::size_t i = 0; i < k; ++i) {
    x = ring.add(x, ring.mul_p_power(ring.lift(ring.field().element(index % q)), i));
    index /= q;
  }
  return x;
}

// Elements of the centre of R that are units.
std::vector<Element> central_units(const Algebra& R, const Guards& guards) {
  const CoefficientRing& ring = R.ring();
  const HowellForm form =
      howell_form(ring, LinearSystem::rows_to_matrix(R.center_generators(), R.rank()));
  std::vector<std::size_t> sizes;
  for (std::size_t k = 0; k < form.rows.rows; ++k) {
    // Coefficients of a row with pivot p^v matter modulo p^(n-v).
    sizes.push_back(static_cast<std::size_t>(
        saturating_power(ring.field().order(), ring.length() - form.pivot_vals[k],
                         guards.max_candidates)));
  }
  std::uint64_t total = 1;
  for (const auto s : sizes) {
    if (total > guards.max_candidates / s) {
      total = guards.max_candidates + 1;
      break;
    }
    total *= s;
  }
  if (total > guards.max_candidates) throw CostGuardExceeded("centre enumeration exceeds max-candidates");
  std::vector<Element> result;
  std::vector<std::size_t> digits(sizes.size(), 0);
  do {
    Element x = R.zero();
    for (std::size_t k = 0; k < digits.size(); ++k) {
      const Scalar coefficient =
          residue_representative(ring, digits[k], ring.length() - form.pivot_vals[k]);
      x = R.add(x, R.scale(coefficient, form.rows.row(k)));
    }
    if (R.is_unit(x)) result.push_back(std::move(x));
  } while (!digits.empty() && advance(digits, sizes));
  std::sort(result.begin(), result.end());
  result.erase(std::unique(result.begin(), result.end()), result.end());
  return result;
}

}  // namespace

EnumerationReport enumerate_crossed_products(const AlgebraPtr& ring_algebra, const GroupTable& group,
                                             const EnumerationOptions& options,
                                             const Guards& guards, bool require_certificate) {
  const Algebra& R = *ring_algebra;
  const CoefficientRing& ring = R.ring();
  const std::size_t m = group.order();
  const std::size_t one = group.identity();
  EnumerationReport report;

  std::vector<Matrix> automorphisms = options.automorphisms;
  if (options.exhaustive) {
    if (automorphisms.empty()) automorphisms = enumerate_automorphisms(R, guards);
  } else {
    if (automorphisms.empty()) {
      throw InvalidInput("the structured path needs a list of automorphisms");
    }
    if (!options.automorphisms_complete && require_certificate) {
      throw IncompleteAutList("coverage cannot be certified without a complete automorphism list");
    }
    automorphisms = close_under_composition(ring, R.rank(), automorphisms, guards);
  }

  const std::vector<Element> units = enumerate_units(R, guards);
  std::vector<Matrix> inners;
  for (const auto& u : units) inners.push_back(inner_matrix(ring_algebra, u));

  // Candidate values of gamma(g,h) for given alpha_g, alpha_h, alpha_gh.
  std::vector<Element> centre_units;
  if (!options.exhaustive) centre_units = central_units(R, guards);
  auto gamma_options = [&](const Matrix& ag, const Matrix& ah, const Matrix& agh) {
    std::vector<Element> out;
    const Matrix lhs = matmul(ring, ah, ag);
    if (options.exhaustive) {
      for (std::size_t u = 0; u < units.size(); ++u) {
        if (matmul(ring, agh, inners[u]) == lhs) out.push_back(units[u]);
      }
      return out;
    }
    const UnitSearch base = is_inner_equivalent({ring_algebra, lhs}, {ring_algebra, agh}, guards);
    if (base.outcome != SearchOutcome::yes) return out;
    for (const auto& z : centre_units) out.push_back(R.multiply(*base.unit, z));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  };

  // Candidate count of the searched family, before filtering.
  const std::size_t free_alpha = options.exhaustive ? m : m - 1;
  const std::size_t free_gamma = options.exhaustive ? m * m : (m - 1) * (m - 1);
  const std::uint64_t gamma_base = options.exhaustive ? units.size() : centre_units.size();
  const std::uint64_t alpha_count =
      saturating_power(automorphisms.size(), free_alpha, guards.max_candidates);
  const std::uint64_t gamma_count = saturating_power(gamma_base, free_gamma, guards.max_candidates);
  if (alpha_count > guards.max_candidates || gamma_count > guards.max_candidates ||
      alpha_count * gamma_count > guards.max_candidates) {
    throw CostGuardExceeded("parameter-set enumeration exceeds max-candidates");
  }
  report.candidates = alpha_count * gamma_count;

  std::vector<ParameterSet> valid;
  std::map<std::vector<std::uint64_t>, std::size_t> lookup;
  std::vector<std::size_t> alpha_digits(m, 0);
  std::vector<std::size_t> alpha_sizes(m, automorphisms.size());
  if (!options.exhaustive) alpha_sizes[one] = 1;  // automorphisms[0] is the identity
  do {
    ParameterSet p{group, ring_algebra, std::vector<Matrix>(m), std::vector<Element>(m * m)};
    for (std::size_t g = 0; g < m; ++g) p.alpha[g] = automorphisms[alpha_digits[g]];

    std::vector<std::vector<Element>> choices(m * m);
    bool feasible = true;
    for (std::size_t g = 0; g < m && feasible; ++g) {
      for (std::size_t h = 0; h < m && feasible; ++h) {
        if (!options.exhaustive && (g == one || h == one)) {
          if (matmul(ring, p.alpha[h], p.alpha[g]) == p.alpha[group.mul(g, h)]) {
            choices[g * m + h] = {R.identity()};
          }
        } else {
          choices[g * m + h] = gamma_options(p.alpha[g], p.alpha[h], p.alpha[group.mul(g, h)]);
        }
        feasible = !choices[g * m + h].empty();
      }
    }
    if (!feasible) continue;
    std::vector<std::size_t> sizes;
    for (const auto& c : choices) sizes.push_back(c.size());
    std::vector<std::size_t> digits(m * m, 0);
    do {
      for (std::size_t k = 0; k < m * m; ++k) p.gamma[k] = choices[k][digits[k]];
      if (!validate_parameter_set(p).ok()) continue;
      if (options.s_action && !s_linear_check(p, *options.s_action).ok) continue;
      lookup.emplace(p.key(), valid.size());
      valid.push_back(p);
    } while (advance(digits, sizes));
  } while (advance(alpha_digits, alpha_sizes));
  report.valid = valid.size();

  // Orbits under transforms and the automorphism action.
  UnionFind classes(valid.size());
  std::vector<std::size_t> r_sizes(m, units.size());
  if (!options.exhaustive) r_sizes[one] = 1;
  std::size_t identity_unit = 0;
  for (std::size_t u = 0; u < units.size(); ++u) {
    if (units[u] == R.identity()) identity_unit = u;
  }
  std::uint64_t moves = 0;
  for (std::size_t idx = 0; idx < valid.size(); ++idx) {
    std::vector<std::size_t> digits(m, 0);
    do {
      if (++moves > guards.max_candidates) {
        throw CostGuardExceeded("equivalence closure exceeds max-candidates");
      }
      EquivalenceWitness w;
      for (std::size_t g = 0; g < m; ++g) {
        w.push_back(!options.exhaustive && g == one ? units[identity_unit] : units[digits[g]]);
      }
      const auto it = lookup.find(transform(valid[idx], w).key());
      if (it == lookup.end()) throw Error("internal: transform left the enumerated family");
      classes.unite(idx, it->second);
    } while (advance(digits, r_sizes));
    for (const auto& tau : automorphisms) {
      const auto it = lookup.find(act_by_automorphism(valid[idx], tau).key());
      if (it == lookup.end()) throw Error("internal: automorphism action left the enumerated family");
      classes.unite(idx, it->second);
    }
  }

  std::map<std::size_t, EnumerationClass> by_root;
  for (std::size_t idx = 0; idx < valid.size(); ++idx) {
    const std::size_t root = classes.find(idx);
    auto [it, inserted] = by_root.try_emplace(root, EnumerationClass{valid[idx], 0});
    if (!inserted && valid[idx].key() < it->second.representative.key()) {
      it->second.representative = valid[idx];
    }
    ++it->second.orbit_size;
  }
  for (auto& [root, cls] : by_root) report.classes.push_back(std::move(cls));
  std::sort(report.classes.begin(), report.classes.end(),
            [](const EnumerationClass& a, const EnumerationClass& b) {
              return a.representative.key() < b.representative.key();
            });

  report.coverage_certified = options.exhaustive || options.automorphisms_complete;
  if (!report.coverage_certified) {
    report.note = "IncompleteAutList: coverage relative to the supplied automorphisms only";
  }
  report.pairwise_inequivalent = true;
  for (std::size_t a = 0; a < report.classes.size(); ++a) {
    for (std::size_t b = a + 1; b < report.classes.size(); ++b) {
      const WeakEquivalenceSearch search = weak_equivalence(
          report.classes[a].representative, report.classes[b].representative, automorphisms, guards);
      if (search.outcome != SearchOutcome::no) report.pairwise_inequivalent = false;
      report.certificates.push_back({a, b, search.outcome, search.candidates_tested});
    }
  }
  return report;
}

}  // namespace wittorders
