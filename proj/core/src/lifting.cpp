#include "wittorders/lifting.hpp"

#include <algorithm>

#include "wittorders/errors.hpp"

namespace wittorders {

std::size_t depth_of_group_algebra(const GroupTable& group, std::uint64_t p) {
  return p_valuation(group.order(), p);
}

namespace {

Matrix multiplicativity_defect(const Algebra& algebra, const Matrix& a) {
  const CoefficientRing& ring = algebra.ring();
  const std::size_t r = algebra.rank();
  Matrix f(r * r, r);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      Element structure(r);
      for (std::size_t w = 0; w < r; ++w) structure[w] = algebra.constant(i, j, w);
      const Element image = vecmat(ring, structure, a);
      f.set_row(i * r + j, algebra.sub(image, algebra.multiply(a.row(i), a.row(j))));
    }
  }
  return f;
}

std::size_t min_valuation(const CoefficientRing& ring, const Matrix& m) {
  std::size_t v = ring.length();
  for (const auto& x : m.data) v = std::min(v, ring.valuation(x));
  return v;
}

bool congruent(const CoefficientRing& ring, const Matrix& a, const Matrix& b, std::size_t k) {
  for (std::size_t idx = 0; idx < a.data.size(); ++idx) {
    if (ring.valuation(ring.sub(a.data[idx], b.data[idx])) < k) return false;
  }
  return true;
}

}  // namespace

LiftStep higman_lift_step(const Morphism& alpha, std::size_t s, std::size_t i) {
  if (i == 0) throw InvalidInput("lifting steps are numbered from 1");
  const Algebra& algebra = *alpha.algebra;
  const CoefficientRing& ring = algebra.ring();
  const std::size_t n = ring.length();
  const std::size_t e = 2 * s + i;
  if (n < e + 1) {
    throw PrecisionExhausted("step " + std::to_string(i) + " needs length " +
                             std::to_string(e + 1) + ", the algebra has length " +
                             std::to_string(n));
  }
  const std::size_t r = algebra.rank();
  if (!is_invertible(ring, alpha.matrix)) throw InvalidInput("morphism is not bijective mod p");

  LiftStep step;
  step.index = i;
  step.before = alpha.matrix;
  step.defect = multiplicativity_defect(algebra, alpha.matrix);
  step.defect_valuation = min_valuation(ring, step.defect);
  if (step.defect_valuation < e) {
    throw InvalidInput("morphism is not an automorphism modulo p^" + std::to_string(e));
  }

  // Working modulo p^(s+1) suffices: only the residue of g enters p^s * g.
  const AlgebraPtr low = algebra.truncated(s + 1);
  const CoefficientRing& low_ring = low->ring();
  const Matrix alpha_inv = inverse(low_ring, truncate(low_ring, alpha.matrix));
  Matrix g_bar(r * r, r);
  for (std::size_t k = 0; k < r * r; ++k) {
    Vector g(r);
    for (std::size_t v = 0; v < r; ++v) {
      g[v] = low_ring.truncate_from(ring.div_p_power(step.defect.at(k, v), e));
    }
    g_bar.set_row(k, vecmat(low_ring, g, alpha_inv));
  }

  Matrix h;
  try {
    h = solve_coboundary(*low, regular_bimodule(*low), g_bar, s);
  } catch (const NotCoboundary&) {
    throw DepthViolation("the obstruction at step " + std::to_string(i) +
                         " is not killed by p^" + std::to_string(s) +
                         "; s is below the depth of this algebra");
  }
  step.correction = h;

  // alpha_{i+1}(x) = alpha(x) + p^(s+i) alpha(h(x)); h's representatives lift as they are.
  const Matrix h_alpha = matmul(ring, h, alpha.matrix);
  step.after = add(ring, alpha.matrix, scale(ring, ring.mul_p_power(ring.one(), s + i), h_alpha));
  step.certified_precision = std::min(e + 1, n);
  step.certified = check_automorphism_mod(algebra, step.after, step.certified_precision).ok();
  step.congruent = congruent(ring, step.after, step.before, s + i);
  if (!step.certified) throw Error("internal: lifted morphism failed certification");
  return step;
}

LiftTrace higman_lift(const Morphism& beta, const LiftConfig& config) {
  const std::size_t s = config.s;
  const std::size_t target = config.target_precision;
  if (target < 2 * s + 1) throw InvalidInput("target precision must be at least 2s+1");
  if (target > beta.algebra->ring().length()) {
    throw PrecisionExhausted("target precision exceeds the length of the algebra");
  }
  const AlgebraPtr algebra = beta.algebra->truncated(target);
  const CoefficientRing& ring = algebra->ring();
  Morphism current{algebra, truncate(ring, beta.matrix), Certification::unchecked};
  if (!check_automorphism_mod(*algebra, current.matrix, 2 * s + 1).ok()) {
    throw InvalidInput("beta is not an automorphism modulo p^(2s+1)");
  }

  LiftTrace trace;
  trace.s = s;
  trace.target_precision = target;
  for (std::size_t i = 1; 2 * s + i < target; ++i) {
    if (i > config.max_iterations) throw CostGuardExceeded("lift exceeded its iteration limit");
    LiftStep step = higman_lift_step(current, s, i);
    current.matrix = step.after;
    trace.steps.push_back(std::move(step));
  }
  trace.result = certify(current);
  trace.certified = trace.result.certified == Certification::automorphism;
  trace.agrees_with_beta = congruent(ring, trace.result.matrix, truncate(ring, beta.matrix), s + 1);
  return trace;
}

MarandaReport maranda_probe(const Morphism& alpha, const Morphism& beta, std::size_t s,
                            const Guards& guards) {
  MarandaReport report;
  report.precision = s;
  report.full = is_inner_equivalent(alpha, beta, guards);
  report.truncated =
      is_inner_equivalent(truncate_morphism(alpha, s), truncate_morphism(beta, s), guards);
  report.inconclusive = report.full.outcome == SearchOutcome::inconclusive ||
                        report.truncated.outcome == SearchOutcome::inconclusive;
  report.agree = !report.inconclusive && report.full.outcome == report.truncated.outcome;
  report.counterexample_candidate = report.truncated.outcome == SearchOutcome::yes &&
                                    report.full.outcome != SearchOutcome::yes;
  return report;
}

std::vector<StabilityEntry> out_stability_check(const AlgebraPtr& algebra,
                                                const std::vector<Matrix>& test_set,
                                                std::size_t t, std::size_t s) {
  if (t < 2 * s + 1) throw InvalidInput("t must be at least 2s+1");
  const std::size_t n = algebra->ring().length();
  if (t > n) throw PrecisionExhausted("t exceeds the length of the algebra");
  std::vector<StabilityEntry> report;
  for (const auto& m : test_set) {
    StabilityEntry entry;
    entry.certified_mod_t = check_automorphism_mod(*algebra, m, t).ok();
    if (entry.certified_mod_t) {
      try {
        const LiftTrace trace = higman_lift({algebra, m, Certification::unchecked}, {s, n, 64});
        entry.lifted = trace.certified;
        entry.matches = trace.agrees_with_beta;
      } catch (const Error& err) {
        entry.error = err.what();
      }
    }
    report.push_back(std::move(entry));
  }
  return report;
}

}  // namespace wittorders
