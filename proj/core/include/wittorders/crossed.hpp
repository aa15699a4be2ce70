#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wittorders/algebra.hpp"
#include "wittorders/group.hpp"
#include "wittorders/morphism.hpp"

namespace wittorders {

// A pair (alpha, gamma) with alpha: G -> Aut(R) given by row-convention
// matrices and gamma: G x G -> U(R).
struct ParameterSet {
  GroupTable group;
  AlgebraPtr ring;
  std::vector<Matrix> alpha;
  // gamma[g * |G| + h] = gamma(g, h).
  std::vector<Element> gamma;

  const Element& gamma_at(std::size_t g, std::size_t h) const {
    return gamma[g * group.order() + h];
  }
  Element& gamma_at(std::size_t g, std::size_t h) { return gamma[g * group.order() + h]; }
  // Flat coordinate dump used for equality, hashing and canonical ordering.
  std::vector<std::uint64_t> key() const;
  bool operator==(const ParameterSet& other) const { return key() == other.key(); }
};

// The parameter set with alpha = id and gamma = 1.
ParameterSet trivial_parameter_set(const GroupTable& group, const AlgebraPtr& ring);

struct ParameterCheck {
  enum class Failure {
    none,
    alpha_not_automorphism,
    gamma_not_unit,
    // alpha_g o alpha_h != iota_gamma(g,h) o alpha_gh; witness (g, h).
    action_identity,
    // gamma(g,h) gamma(gh,k) != alpha_g(gamma(h,k)) gamma(g,hk); witness (g, h, k).
    cocycle_identity
  };
  Failure failure = Failure::none;
  std::vector<std::size_t> witness;

  bool ok() const { return failure == Failure::none; }
  std::string describe() const;
};

ParameterCheck validate_parameter_set(const ParameterSet& p);

// r: G -> U(R).
using EquivalenceWitness = std::vector<Element>;

// alpha'_g = iota_r(g) o alpha_g, gamma'(g,h) = r(g) alpha_g(r(h)) gamma(g,h) r(gh)^-1.
// Throws NotAUnit if some r(g) is not a unit.
ParameterSet transform(const ParameterSet& p, const EquivalenceWitness& r);

// The witness w' with transform(transform(p, w), w') = p.
EquivalenceWitness inverse_witness(const ParameterSet& p, const EquivalenceWitness& w);

struct Normalization {
  ParameterSet parameters;
  EquivalenceWitness witness;
};

// Transforms by r(g) = gamma(1,1)^-1, after which gamma(1,k) = gamma(g,1) = 1
// and alpha_1 = id.
Normalization normalize(const ParameterSet& p);
bool is_normalized(const ParameterSet& p);

// (tau alpha)_g = tau o alpha_g o tau^-1, (tau gamma) = tau o gamma.
ParameterSet act_by_automorphism(const ParameterSet& p, const Matrix& tau);

// The crossed product R * G of a parameter set, with basis lambda_i u_g at
// index g * r + i and multiplication
//   (x u_g)(y u_h) = x alpha_g(y) gamma(g,h) u_gh.
struct CrossedProduct {
  ParameterSet parameters;
  AlgebraPtr algebra;
  std::vector<std::size_t> degree;
  // u_g = 1_R u_g.
  std::vector<Element> units;

  std::size_t index(std::size_t g, std::size_t i) const {
    return g * parameters.ring->rank() + i;
  }
  // The ring embedding R -> Gamma, x -> x gamma(1,1)^-1 u_1.
  Element embed(const Element& x) const;
  // Inverse of `embed` on the degree-one component; throws InvalidInput if
  // the element has components outside degree one.
  Element degree_one_preimage(const Element& y) const;
  // x u_g as an element of Gamma.
  Element homogeneous(const Element& x, std::size_t g) const;
};

// Structure constants of R * G without validating the parameter set. The
// resulting table still goes through Algebra::make, so a set violating its
// identities is reported as an AssociativityViolation (or IdentityViolation).
AlgebraPtr crossed_product_algebra(const ParameterSet& p, const Guards& guards = {});

// Validates the parameter set first (InvalidInput with the failure if not).
CrossedProduct build_crossed_product(const ParameterSet& p, const Guards& guards = {});

// Checks that a linear map between two crossed products over the same group
// maps each degree-g component into degree g.
bool is_graded_map(const CrossedProduct& source, const CrossedProduct& target, const Matrix& m);

// Graded isomorphism Gamma(p) -> Gamma(transform(p, r)), x u_g -> x r(g)^-1 u'_g.
Matrix equivalence_isomorphism(const ParameterSet& p, const EquivalenceWitness& r);

// Graded isomorphism Gamma(p) -> Gamma(act_by_automorphism(p, tau)),
// x u_g -> tau(x) v_g.
Matrix action_isomorphism(const ParameterSet& p, const Matrix& tau);

struct SLinearityCheck {
  bool ok = true;
  // Group element whose (normalized) alpha fails to commute with S.
  std::optional<std::size_t> witness;
};

// S-linearity of the normalized parameter set: every alpha_g commutes with
// the S-action matrices on R.
SLinearityCheck s_linear_check(const ParameterSet& p, const OLinearityData& s);

struct GroupAlgebraParameters {
  ParameterSet parameters;
  Quotient quotient;
  // Elements of the normal subgroup, in the order of the basis of R.
  std::vector<std::size_t> subgroup;
  // Row-convention matrix of the isomorphism Gamma -> ring[G], x u_X -> x [X].
  Matrix isomorphism;
};

// R = ring[N], group G/N, alpha_X(n) = [X] n [X]^-1 and gamma(X,Y) = [X][Y][XY]^-1
// for the coset representatives chosen by quotient_group. Throws NotNormal.
GroupAlgebraParameters group_algebra_parameter_set(const GroupTable& group,
                                                   const std::vector<std::size_t>& normal,
                                                   const CoefficientRing& ring,
                                                   const Guards& guards = {});

// The corner at a central idempotent b fixed by every alpha_g:
// alpha'_g = alpha_g restricted to Rb, gamma' = gamma b. Throws NotIdempotent
// or InvalidInput when b is not central or not stable.
ParameterSet restrict_to_block(const ParameterSet& p, const Element& b, const Guards& guards = {});

struct CondensedCrossedProduct {
  // Crossed product over the corner eRe.
  CrossedProduct product;
  // Corner of R at e.
  Condensation corner;
  // x_g with x_g^-1 e x_g = u_g^-1 e u_g, in R.
  std::vector<Element> conjugators;
  // u'_g = u_g x_g^-1 in Gamma; each commutes with e.
  std::vector<Element> adjusted_units;
  // Row k: image in Gamma of the k-th basis element of product.algebra.
  Matrix embedding;
};

// e Gamma e for an idempotent e of R. Throws NotIdempotent, or
// ConjugacyWitnessNotFound if some conjugator cannot be found.
CondensedCrossedProduct condense_crossed(const CrossedProduct& gamma, const Element& e,
                                         const Guards& guards = {});

struct Decondensation {
  MatrixRing matrices;
  // Row-convention map M_m(e Gamma e) -> Gamma, E_ab (x) y -> c_a y d_b.
  Matrix map;
};

// Given c_a in e_a R e and d_b in e R e_b with d_a c_a = e and sum_a c_a d_a = 1
// (for matrix units: c_a = E_a1, d_b = E_1b), returns the map
// M_m(e Gamma e) -> Gamma. The caller certifies it with check_algebra_map.
Decondensation decondense(const CrossedProduct& gamma, const CondensedCrossedProduct& condensed,
                          const std::vector<Element>& column_units,
                          const std::vector<Element>& row_units, const Guards& guards = {});

// Grading of M_m(Gamma') induced by the grading of Gamma'.
std::vector<std::size_t> matrix_grading(const Decondensation& d, const CrossedProduct& inner);

// All automorphisms of a tiny algebra, by exhaustive search over matrices.
// Throws CostGuardExceeded past guards.max_candidates.
std::vector<Matrix> enumerate_automorphisms(const Algebra& algebra, const Guards& guards = {});

// All units of a tiny algebra, in enumeration order.
std::vector<Element> enumerate_units(const Algebra& algebra, const Guards& guards = {});

// Searches tau in `automorphisms` and r: G -> U(R) with
// transform(act_by_automorphism(p, tau), r) = q.
struct WeakEquivalenceSearch {
  SearchOutcome outcome = SearchOutcome::no;
  std::optional<Matrix> tau;
  std::optional<EquivalenceWitness> witness;
  std::uint64_t candidates_tested = 0;
};

WeakEquivalenceSearch weak_equivalence(const ParameterSet& p, const ParameterSet& q,
                                       const std::vector<Matrix>& automorphisms,
                                       const Guards& guards = {});

struct EnumerationOptions {
  // Exhaustive path: every alpha: G -> Aut(R) from the automorphism list and
  // every gamma: G x G -> U(R). Structured path: normalized sets only, with
  // alpha_1 = id and gamma(g,h) ranging over c(g,h) U(Z(R)).
  bool exhaustive = true;
  // Automorphisms of R. Empty means: compute Aut(R) by brute force (only
  // possible on the exhaustive path).
  std::vector<Matrix> automorphisms;
  // The caller asserts that `automorphisms` is all of Aut_S(R). Without it
  // the structured path reports coverage as uncertified.
  bool automorphisms_complete = false;
  // Optional S-action; parameter sets whose alpha are not S-linear are skipped.
  std::optional<OLinearityData> s_action;
};

struct EnumerationClass {
  ParameterSet representative;
  std::size_t orbit_size = 0;
};

// Outcome of the equivalence search between representatives `first` < `second`.
struct PairCertificate {
  std::size_t first = 0;
  std::size_t second = 0;
  SearchOutcome outcome = SearchOutcome::inconclusive;
  std::uint64_t candidates_tested = 0;
};

struct EnumerationReport {
  std::vector<EnumerationClass> classes;
  std::vector<PairCertificate> certificates;
  std::uint64_t candidates = 0;
  std::uint64_t valid = 0;
  // Every valid parameter set of the searched family lies in the union of the
  // listed orbits (always true on the exhaustive path).
  bool coverage_certified = false;
  // Pairwise weak_equivalence answers "no" for every pair of representatives.
  bool pairwise_inequivalent = false;
  std::string note;
};

// Weak-equivalence classes of parameter sets. Throws CostGuardExceeded when
// the candidate count exceeds guards.max_candidates, and IncompleteAutList on
// the structured path when require_certificate is set and the automorphism
// list is not asserted complete.
EnumerationReport enumerate_crossed_products(const AlgebraPtr& ring, const GroupTable& group,
                                             const EnumerationOptions& options,
                                             const Guards& guards = {},
                                             bool require_certificate = false);

}  // namespace wittorders
