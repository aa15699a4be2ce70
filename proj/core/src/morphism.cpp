#include "wittorders/morphism.hpp"

#include <random>

#include "wittorders/errors.hpp"

namespace wittorders {

const char* to_string(Certification c) {
  switch (c) {
    case Certification::unchecked: return "unchecked";
    case Certification::automorphism: return "automorphism";
    case Certification::rejected: return "rejected";
  }
  return "unchecked";
}

const char* to_string(SearchOutcome o) {
  switch (o) {
    case SearchOutcome::yes: return "yes";
    case SearchOutcome::no: return "no";
    case SearchOutcome::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

Element Morphism::apply(const Element& x) const {
  algebra->check(x);
  return vecmat(algebra->ring(), x, matrix);
}

std::string MapCheck::describe() const {
  switch (failure) {
    case Failure::none: return "ok";
    case Failure::not_invertible: return "matrix is not invertible mod p";
    case Failure::identity_not_fixed:
      return "identity not fixed at coordinate " + std::to_string(*identity_coordinate);
    case Failure::not_multiplicative:
      return "not multiplicative at basis pair (" + std::to_string((*witness)[0]) + ", " +
             std::to_string((*witness)[1]) + "), coordinate " + std::to_string((*witness)[2]);
  }
  return "unknown";
}

MapCheck check_algebra_map(const Algebra& source, const Algebra& target, const Matrix& m,
                           bool require_bijective) {
  if (!(source.ring() == target.ring())) throw RingMismatch("algebras over different rings");
  if (m.rows != source.rank() || m.cols != target.rank()) {
    throw DimensionMismatch("morphism matrix does not match the algebra ranks");
  }
  const CoefficientRing& ring = source.ring();
  MapCheck result;
  if (require_bijective && (m.rows != m.cols || !is_invertible(ring, m))) {
    result.failure = MapCheck::Failure::not_invertible;
    return result;
  }
  const Element image_of_one = vecmat(ring, source.identity(), m);
  for (std::size_t v = 0; v < target.rank(); ++v) {
    if (image_of_one[v] != target.identity()[v]) {
      result.failure = MapCheck::Failure::identity_not_fixed;
      result.identity_coordinate = v;
      return result;
    }
  }
  const std::size_t r = source.rank();
  std::vector<Element> rows(r);
  for (std::size_t i = 0; i < r; ++i) rows[i] = m.row(i);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      const Element lhs = target.multiply(rows[i], rows[j]);
      Element structure(r);
      for (std::size_t w = 0; w < r; ++w) structure[w] = source.constant(i, j, w);
      const Element rhs = vecmat(ring, structure, m);
      for (std::size_t v = 0; v < target.rank(); ++v) {
        if (lhs[v] != rhs[v]) {
          result.failure = MapCheck::Failure::not_multiplicative;
          result.witness = std::array<std::size_t, 3>{i, j, v};
          return result;
        }
      }
    }
  }
  return result;
}

MapCheck check_automorphism(const Algebra& algebra, const Matrix& m) {
  return check_algebra_map(algebra, algebra, m, true);
}

MapCheck check_automorphism_mod(const Algebra& algebra, const Matrix& m, std::size_t precision) {
  if (precision == 0 || precision > algebra.ring().length()) {
    throw InvalidInput("precision must lie in [1, n]");
  }
  const AlgebraPtr reduced = algebra.truncated(precision);
  return check_automorphism(*reduced, truncate(reduced->ring(), m));
}

Morphism certify(Morphism m) {
  m.certified = check_automorphism(*m.algebra, m.matrix).ok() ? Certification::automorphism
                                                               : Certification::rejected;
  return m;
}

Morphism identity_morphism(const AlgebraPtr& algebra) {
  return {algebra, identity_matrix(algebra->ring(), algebra->rank()), Certification::automorphism};
}

Morphism compose(const Morphism& a, const Morphism& b) {
  if (a.algebra != b.algebra && !(a.algebra->ring() == b.algebra->ring() &&
                                  a.algebra->rank() == b.algebra->rank() &&
                                  a.algebra->constants() == b.algebra->constants())) {
    throw DimensionMismatch("composing morphisms of different algebras");
  }
  Morphism result{a.algebra, matmul(a.algebra->ring(), b.matrix, a.matrix), Certification::unchecked};
  if (a.certified == Certification::automorphism && b.certified == Certification::automorphism) {
    result.certified = Certification::automorphism;
  }
  return result;
}

Morphism inverse_morphism(const Morphism& a) {
  return {a.algebra, inverse(a.algebra->ring(), a.matrix), a.certified};
}

Morphism truncate_morphism(const Morphism& a, std::size_t m) {
  if (m == 0 || m > a.algebra->ring().length()) {
    throw InvalidInput("truncation length must lie in [1, n]");
  }
  const AlgebraPtr target = a.algebra->truncated(m);
  Morphism result{target, truncate(target->ring(), a.matrix), Certification::unchecked};
  if (a.certified == Certification::automorphism) result = certify(std::move(result));
  return result;
}

OLinearityCheck check_o_linear(const CoefficientRing& ring, const Matrix& m,
                               const OLinearityData& o) {
  if (o.generators.empty()) throw InvalidInput("O-linearity data needs at least one generator");
  OLinearityCheck result;
  for (std::size_t a = 0; a < o.generators.size(); ++a) {
    const Matrix& c = o.generators[a];
    if (c.rows != m.rows || c.cols != m.cols || m.rows != m.cols) {
      throw DimensionMismatch("O-action matrix does not match the morphism");
    }
    const Matrix lhs = matmul(ring, c, m);
    const Matrix rhs = matmul(ring, m, c);
    for (std::size_t s = 0; s < m.rows; ++s) {
      for (std::size_t v = 0; v < m.cols; ++v) {
        if (lhs.at(s, v) != rhs.at(s, v)) {
          result.ok = false;
          result.witness = std::array<std::size_t, 3>{a, s, v};
          return result;
        }
      }
    }
  }
  return result;
}

Morphism inner_from_unit(const AlgebraPtr& algebra, const Element& u) {
  const Element u_inv = algebra->unit_inverse(u);
  const std::size_t r = algebra->rank();
  Matrix m(r, r);
  for (std::size_t i = 0; i < r; ++i) m.set_row(i, algebra->product(u, algebra->basis(i), u_inv));
  return {algebra, std::move(m), Certification::automorphism};
}

namespace {

// Picks generators whose residues mod p are F_q-linearly independent, in order.
std::vector<Element> independent_residues(const Algebra& algebra,
                                          const std::vector<Element>& generators) {
  const CoefficientRing residue_ring = algebra.ring().truncated(1);
  std::vector<Element> chosen;
  std::size_t rank = 0;
  for (const auto& g : generators) {
    std::vector<Element> trial;
    for (const auto& c : chosen) trial.push_back(truncate(residue_ring, c));
    trial.push_back(truncate(residue_ring, g));
    const HowellForm form =
        howell_form(residue_ring, LinearSystem::rows_to_matrix(trial, algebra.rank()));
    if (form.rows.rows > rank) {
      rank = form.rows.rows;
      chosen.push_back(g);
    }
  }
  return chosen;
}

Element combination(const Algebra& algebra, const std::vector<Element>& basis,
                    const std::vector<std::uint64_t>& digits) {
  const CoefficientRing& ring = algebra.ring();
  Element x = algebra.zero();
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (digits[k] == 0) continue;
    x = algebra.add(x, algebra.scale(ring.lift(ring.field().element(digits[k])), basis[k]));
  }
  return x;
}

}  // namespace

UnitSearch find_unit_in_span(const Algebra& algebra, const std::vector<Element>& generators,
                             const Guards& guards) {
  for (const auto& g : generators) algebra.check(g);
  UnitSearch result;
  const std::vector<Element> basis = independent_residues(algebra, generators);
  result.residue_dimension = basis.size();
  if (basis.empty()) return result;

  const std::uint64_t q = algebra.ring().field().order();
  // Number of nonzero combinations, saturated at the guard.
  std::uint64_t total = 1;
  bool exceeds = false;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (total > guards.max_candidates / q + 1) {
      exceeds = true;
      break;
    }
    total *= q;
  }
  if (!exceeds && total - 1 > guards.max_candidates) exceeds = true;

  std::vector<std::uint64_t> digits(basis.size(), 0);
  if (!exceeds) {
    for (std::uint64_t index = 1; index < total; ++index) {
      std::uint64_t rest = index;
      for (auto& d : digits) {
        d = rest % q;
        rest /= q;
      }
      ++result.candidates_tested;
      Element x = combination(algebra, basis, digits);
      if (algebra.is_unit(x)) {
        result.outcome = SearchOutcome::yes;
        result.unit = std::move(x);
        return result;
      }
    }
    result.outcome = SearchOutcome::no;
    return result;
  }

  std::mt19937_64 rng(guards.seed);
  std::uniform_int_distribution<std::uint64_t> digit(0, q - 1);
  for (std::uint64_t draw = 0; draw < guards.random_draws; ++draw) {
    for (auto& d : digits) d = digit(rng);
    ++result.candidates_tested;
    Element x = combination(algebra, basis, digits);
    if (algebra.is_unit(x)) {
      result.outcome = SearchOutcome::yes;
      result.unit = std::move(x);
      return result;
    }
  }
  result.outcome = SearchOutcome::inconclusive;
  return result;
}

UnitSearch is_inner_equivalent(const Morphism& a, const Morphism& b, const Guards& guards) {
  const Algebra& algebra = *a.algebra;
  if (b.matrix.rows != algebra.rank() || !(b.algebra->ring() == algebra.ring())) {
    throw DimensionMismatch("morphisms act on different algebras");
  }
  const CoefficientRing& ring = algebra.ring();
  const std::size_t r = algebra.rank();
  // a(b_j) u - u b(b_j) = (left(a(b_j)) - right(b(b_j))) u = 0 for all j.
  Matrix system(r * r, r);
  for (std::size_t j = 0; j < r; ++j) {
    const Matrix diff = sub(ring, algebra.left_regular(a.matrix.row(j)),
                            algebra.right_regular(b.matrix.row(j)));
    for (std::size_t v = 0; v < r; ++v) {
      for (std::size_t k = 0; k < r; ++k) system.at(j * r + v, k) = diff.at(v, k);
    }
  }
  const LinearSystem solver(ring, system);
  UnitSearch result = find_unit_in_span(algebra, solver.kernel(), guards);
  if (result.outcome == SearchOutcome::yes) {
    const Morphism conjugated = compose(inner_from_unit(a.algebra, *result.unit), b);
    if (conjugated.matrix != a.matrix) throw Error("internal: inner-equivalence witness failed");
  }
  return result;
}

IsomorphismSearch find_isomorphism(const Algebra& source, const Algebra& target,
                                   const Guards& guards) {
  IsomorphismSearch result;
  if (!(source.ring() == target.ring())) throw RingMismatch("algebras over different rings");
  if (source.rank() != target.rank()) return result;
  const CoefficientRing& ring = source.ring();
  const std::size_t r = source.rank();

  std::optional<std::size_t> pinned;
  for (std::size_t i = 0; i < r && !pinned; ++i) {
    if (source.identity() == source.basis(i)) pinned = i;
  }
  const std::size_t free_entries = (pinned ? r - 1 : r) * r;
  const std::uint64_t size = ring.cardinality();
  std::uint64_t total = 1;
  for (std::size_t k = 0; k < free_entries; ++k) {
    if (total > guards.max_candidates / size) {
      result.outcome = SearchOutcome::inconclusive;
      return result;
    }
    total *= size;
  }

  Matrix m(r, r);
  for (std::uint64_t index = 0; index < total; ++index) {
    std::uint64_t rest = index;
    for (std::size_t i = 0; i < r; ++i) {
      if (pinned && i == *pinned) {
        m.set_row(i, target.identity());
        continue;
      }
      for (std::size_t j = 0; j < r; ++j) {
        m.at(i, j) = ring.element(rest % size);
        rest /= size;
      }
    }
    ++result.candidates_tested;
    if (check_algebra_map(source, target, m).ok()) {
      result.outcome = SearchOutcome::yes;
      result.isomorphism = m;
      return result;
    }
  }
  result.outcome = SearchOutcome::no;
  return result;
}

}  // namespace wittorders
