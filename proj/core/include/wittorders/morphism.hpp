#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wittorders/algebra.hpp"

namespace wittorders {

enum class Certification { unchecked, automorphism, rejected };

const char* to_string(Certification c);

// A coefficient-linear endomorphism of an algebra. Row i of `matrix` holds the
// coordinates of the image of basis element i, so alpha(x) = x * matrix for a
// coordinate row x, and the matrix of alpha o beta is matrix(beta) * matrix(alpha).
struct Morphism {
  AlgebraPtr algebra;
  Matrix matrix;
  Certification certified = Certification::unchecked;

  Element apply(const Element& x) const;
};

// Outcome of checking a linear map between algebras for being a ring
// homomorphism (and, when square, bijective).
struct MapCheck {
  enum class Failure { none, not_invertible, identity_not_fixed, not_multiplicative };
  Failure failure = Failure::none;
  // Basis pair (i, j) and output coordinate v of the first multiplicativity failure.
  std::optional<std::array<std::size_t, 3>> witness;
  // Coordinate of the first mismatch between alpha(1) and 1.
  std::optional<std::size_t> identity_coordinate;

  bool ok() const { return failure == Failure::none; }
  std::string describe() const;
};

// Multiplicativity, unitality and (if square) invertibility of the linear map
// source -> target with the given row-convention matrix.
MapCheck check_algebra_map(const Algebra& source, const Algebra& target, const Matrix& m,
                           bool require_bijective = true);

// Verifies the automorphism equations
//   sum_{s,t} m(i,s) m(j,t) c(s,t;v) = sum_w c(i,j;w) m(w,v)
// together with M(1) = 1 and invertibility mod p.
MapCheck check_automorphism(const Algebra& algebra, const Matrix& m);
// Same equations read modulo p^m (m <= precision of the algebra).
MapCheck check_automorphism_mod(const Algebra& algebra, const Matrix& m, std::size_t precision);

// Returns a copy of `m` with its certification field filled in.
Morphism certify(Morphism m);

Morphism identity_morphism(const AlgebraPtr& algebra);
// a o b. Certified when both factors are.
Morphism compose(const Morphism& a, const Morphism& b);
// Throws NotAUnit if the matrix is singular mod p.
Morphism inverse_morphism(const Morphism& a);
// Entrywise reduction to W_m, re-certified if the input was certified.
Morphism truncate_morphism(const Morphism& a, std::size_t m);

// Action of a W(k)-basis of a commutative coefficient order O on the algebra,
// one matrix per generator, in the same coordinates as the morphism matrices.
struct OLinearityData {
  std::vector<Matrix> generators;
};

struct OLinearityCheck {
  bool ok = true;
  // Generator index and matrix position (s, v) of the first failure.
  std::optional<std::array<std::size_t, 3>> witness;
};

// M is O-linear iff it commutes with every generator matrix.
OLinearityCheck check_o_linear(const CoefficientRing& ring, const Matrix& m,
                               const OLinearityData& o);

// x -> u x u^-1. Throws NotAUnit.
Morphism inner_from_unit(const AlgebraPtr& algebra, const Element& u);

enum class SearchOutcome { yes, no, inconclusive };

const char* to_string(SearchOutcome o);

struct UnitSearch {
  SearchOutcome outcome = SearchOutcome::no;
  std::optional<Element> unit;
  std::uint64_t candidates_tested = 0;
  // Dimension over F_q of the residue span that was searched.
  std::size_t residue_dimension = 0;
};

// Looks for a unit in the module spanned by `generators`. A unit exists iff
// some element of the residue span mod p is a unit of A/pA, so the search
// enumerates F_q-combinations of generators with independent residues, in a
// fixed order, up to guards.max_candidates; beyond that it draws
// guards.random_draws random combinations from a generator seeded with
// guards.seed and reports inconclusive if none is a unit.
UnitSearch find_unit_in_span(const Algebra& algebra, const std::vector<Element>& generators,
                             const Guards& guards = {});

// Decides whether a = iota_u o b for some unit u, by searching the solution
// module of a(x) u = u b(x) for a unit. A "yes" witness is re-verified.
UnitSearch is_inner_equivalent(const Morphism& a, const Morphism& b, const Guards& guards = {});

struct IsomorphismSearch {
  SearchOutcome outcome = SearchOutcome::no;
  std::optional<Matrix> isomorphism;
  std::uint64_t candidates_tested = 0;
};

// Exhaustive search for an algebra isomorphism source -> target over all
// matrices whose row at a basis-vector identity is pinned. Intended for rank
// <= 2 or tiny rings; reports inconclusive past guards.max_candidates.
IsomorphismSearch find_isomorphism(const Algebra& source, const Algebra& target,
                                   const Guards& guards = {});

}  // namespace wittorders
