#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wittorders/cohomology.hpp"
#include "wittorders/group.hpp"
#include "wittorders/morphism.hpp"

namespace wittorders {

// v_p(|G|), the depth of a group algebra over an unramified coefficient ring.
std::size_t depth_of_group_algebra(const GroupTable& group, std::uint64_t p);

struct LiftConfig {
  std::size_t s = 0;
  std::size_t target_precision = 1;
  std::size_t max_iterations = 64;
};

// One successive-approximation step alpha_i -> alpha_{i+1}.
struct LiftStep {
  std::size_t index = 0;
  Matrix before;
  Matrix after;
  // f(b_i (x) b_j) = alpha(b_i b_j) - alpha(b_i) alpha(b_j), rows i*r+j.
  Matrix defect;
  // Minimal p-valuation over the entries of `defect` (n if it vanishes).
  std::size_t defect_valuation = 0;
  // Solution of d1(h) = p^s * alpha^-1(defect / p^(2s+i)) modulo p^(s+1).
  Matrix correction;
  // alpha_{i+1} verified as an automorphism modulo p^(2s+i+1).
  bool certified = false;
  std::size_t certified_precision = 0;
  // alpha_{i+1} == alpha_i modulo p^(s+i).
  bool congruent = false;
};

struct LiftTrace {
  std::size_t s = 0;
  std::size_t target_precision = 0;
  std::vector<LiftStep> steps;
  Morphism result;
  // Final morphism certified modulo p^N and congruent to beta modulo p^(s+1).
  bool certified = false;
  bool agrees_with_beta = false;
};

// Performs step i of the lifting. `alpha` must be an automorphism modulo
// p^(2s+i) and its algebra must have length >= 2s+i+1 (else
// PrecisionExhausted). Throws DepthViolation if the correction cannot be
// found, which means s is below the depth of the algebra.
LiftStep higman_lift_step(const Morphism& alpha, std::size_t s, std::size_t i);

// Lifts beta (an automorphism modulo p^(2s+1), given over an algebra of
// length >= target precision N) to an automorphism modulo p^N. Zero steps
// when N = 2s+1.
LiftTrace higman_lift(const Morphism& beta, const LiftConfig& config);

struct MarandaReport {
  UnitSearch full;
  UnitSearch truncated;
  std::size_t precision = 0;
  // Both searches conclusive and with the same answer.
  bool agree = false;
  // Inner-equivalent modulo p^s but not at full precision.
  bool counterexample_candidate = false;
  bool inconclusive = false;
};

// Compares inner-equivalence of alpha and beta at full precision and modulo p^s.
MarandaReport maranda_probe(const Morphism& alpha, const Morphism& beta, std::size_t s,
                            const Guards& guards = {});

struct StabilityEntry {
  bool certified_mod_t = false;
  bool lifted = false;
  // Truncation of the lift to p^(s+1) equals the truncation of the input.
  bool matches = false;
  std::string error;
};

// For each matrix of the test set (an automorphism modulo p^t of `algebra`,
// t >= 2s+1), lifts it to the full length of `algebra` and compares
// truncations at p^(s+1).
std::vector<StabilityEntry> out_stability_check(const AlgebraPtr& algebra,
                                                const std::vector<Matrix>& test_set,
                                                std::size_t t, std::size_t s);

}  // namespace wittorders
