// Acceptance suite: one line per criterion, exit status 0 iff all pass.
//
// Every criterion produces a JSON report built only from exact data, so the
// determinism criterion can rerun them and compare the serialized bytes.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "../unit/oracles.hpp"
#include "wittorders/errors.hpp"
#include "wittorders/lifting.hpp"
#include "wittorders_tools/cli.hpp"
#include "wittorders_tools/fixtures.hpp"
#include "wittorders_tools/io.hpp"

using namespace wittorders;
using io::Json;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  Json report = Json::object();

  void require(bool condition, const std::string& what) {
    if (!condition && pass) {
      pass = false;
      detail = what;
    }
  }
};

// ---------------------------------------------------------------- criterion 1

Outcome witt_oracle() {
  Outcome o;
  for (const auto [p, n] : {std::pair<std::uint64_t, std::size_t>{2, 2}, {2, 3}, {3, 2}, {3, 3}}) {
    const WittRing w(FiniteField::prime(p), n);
    const std::uint64_t size = w.cardinality();
    std::set<std::uint64_t> image;
    std::uint64_t pairs = 0;
    bool ok = true;
    for (std::uint64_t a = 0; a < size; ++a) {
      const WittVector u = w.element(a);
      const std::uint64_t x = oracle::witt_to_integer(u, p);
      ok = ok && w.padic_oracle(u) == x;
      image.insert(x);
      for (std::uint64_t b = 0; b < size; ++b) {
        const WittVector v = w.element(b);
        const std::uint64_t y = oracle::witt_to_integer(v, p);
        ok = ok && oracle::witt_to_integer(w.add(u, v), p) == (x + y) % size &&
             oracle::witt_to_integer(w.mul(u, v), p) == x * y % size;
        ++pairs;
      }
    }
    ok = ok && image.size() == size;
    o.require(ok, "oracle mismatch for p^n = " + std::to_string(size));
    o.report[std::to_string(size)] = {{"pairs", pairs}, {"isomorphism", ok}};
  }
  return o;
}

// ---------------------------------------------------------------- criterion 2

Outcome p_identity() {
  Outcome o;
  for (std::uint64_t p : {2, 3}) {
    const WittRing w(FiniteField::prime(p), 3);
    WittVector sum = w.zero();
    for (std::uint64_t k = 0; k < p; ++k) sum = w.add(sum, w.one());
    Json comps = Json::array();
    for (const auto& c : sum.components) comps.push_back(c.c[0]);
    const bool ok = comps == Json::array({0, 1, 0});
    o.require(ok, "p-fold sum of 1 differs from (0,1,0) for p = " + std::to_string(p));
    o.report[std::to_string(p)] = comps;
  }
  return o;
}

// ---------------------------------------------------------------- criterion 3

Outcome inversion_formula() {
  Outcome o;
  for (const auto [p, n] : {std::pair<std::uint64_t, std::size_t>{3, 2}, {2, 3}}) {
    const WittRing w(FiniteField::prime(p), n);
    std::uint64_t units = 0;
    bool ok = true;
    for (std::uint64_t a = 0; a < w.cardinality(); ++a) {
      const WittVector u = w.element(a);
      for (std::uint64_t b = 0; b < w.cardinality(); ++b) {
        if (w.mul(u, w.element(b)) != w.one()) continue;
        ++units;
        ok = ok && w.is_unit(u) && w.inv(u) == w.element(b);
      }
    }
    ok = ok && units == (p - 1) * oracle::integer_power(p, n - 1);
    o.require(ok, "inverse mismatch in W_" + std::to_string(n) + "(F_" + std::to_string(p) + ")");
    o.report["W" + std::to_string(n) + "F" + std::to_string(p)] = {{"units", units}, {"match", ok}};
  }
  return o;
}

// ---------------------------------------------------------------- criterion 4

bool multiplicative(const Algebra& a, const Matrix& m) {
  const CoefficientRing& r = a.ring();
  for (std::size_t i = 0; i < a.rank(); ++i) {
    for (std::size_t j = 0; j < a.rank(); ++j) {
      if (vecmat(r, a.multiply(a.basis(i), a.basis(j)), m) !=
          a.multiply(vecmat(r, a.basis(i), m), vecmat(r, a.basis(j), m))) {
        return false;
      }
    }
  }
  return true;
}

Outcome automorphism_equations() {
  Outcome o;
  const AlgebraPtr a = fixtures::c3_group_algebra();
  const CoefficientRing& ring = a->ring();
  // The identity morphism and the maps induced by both automorphisms of C_3.
  std::vector<std::pair<std::string, Matrix>> maps = {{"identity", identity_morphism(a).matrix}};
  for (std::size_t k : {1u, 2u}) {
    Matrix m(3, 3);
    for (std::size_t g = 0; g < 3; ++g) m.at(g, (g * k) % 3) = ring.one();
    maps.push_back({"g->g^" + std::to_string(k), m});
  }
  Json certified = Json::object();
  for (const auto& [name, m] : maps) {
    const bool ok = check_automorphism(*a, m).ok();
    o.require(ok, name + " failed to certify");
    certified[name] = ok;
  }
  o.report["certified"] = certified;

  std::mt19937_64 rng(2024);
  std::uint64_t rejected = 0;
  Json witnesses = Json::array();
  while (rejected < 100) {
    Matrix m = maps[1 + rng() % 2].second;
    const std::size_t row = 1 + rng() % 2;
    const std::size_t col = rng() % 3;
    m.at(row, col) = ring.add(m.at(row, col), ring.from_int(1 + static_cast<std::int64_t>(rng() % 8)));
    if (multiplicative(*a, m) && is_invertible(ring, m)) continue;
    const MapCheck check = check_automorphism(*a, m);
    bool witnessed = !check.ok();
    if (check.witness) {
      const auto [i, j, v] = *check.witness;
      witnessed = witnessed && vecmat(ring, a->multiply(a->basis(i), a->basis(j)), m)[v] !=
                                   a->multiply(vecmat(ring, a->basis(i), m), vecmat(ring, a->basis(j), m))[v];
      witnesses.push_back({i, j, v});
    } else {
      witnessed = witnessed && check.failure == MapCheck::Failure::not_invertible &&
                  !is_invertible(ring, m);
      witnesses.push_back("not_invertible");
    }
    o.require(witnessed, "perturbation accepted or witness not genuine");
    ++rejected;
  }
  o.report["rejected"] = rejected;
  o.report["witnesses"] = witnesses;
  return o;
}

// ---------------------------------------------------------------- criterion 5

bool congruent(const CoefficientRing& ring, const Matrix& a, const Matrix& b, std::size_t e) {
  for (std::size_t k = 0; k < a.data.size(); ++k) {
    if (ring.valuation(ring.sub(a.data[k], b.data[k])) < e) return false;
  }
  return true;
}

Outcome higman_lift_run() {
  Outcome o;
  for (const auto& [name, beta] : {std::pair{std::string("Z3C3"), fixtures::z81_c3_beta()},
                                   std::pair{std::string("Z2C2"), fixtures::z16_c2_beta()}}) {
    const Algebra& a = *beta.algebra;
    const CoefficientRing& ring = a.ring();
    o.require(check_automorphism_mod(a, beta.matrix, 3).ok(), name + ": beta not certified mod p^3");
    o.require(!check_automorphism(a, beta.matrix).ok(), name + ": beta already exact");
    const LiftTrace trace = higman_lift(beta, {1, 4, 64});
    o.require(trace.certified && check_automorphism(a, trace.result.matrix).ok(),
              name + ": lift not certified mod p^4");
    o.require(congruent(ring, trace.result.matrix, beta.matrix, 2), name + ": lift not congruent to beta");
    for (const auto& step : trace.steps) {
      o.require(step.congruent && congruent(ring, step.after, step.before, 1 + step.index),
                name + ": step congruence fails");
    }
    o.report[name] = io::lift_trace_to_json(trace);
  }
  return o;
}

// ---------------------------------------------------------------- criterion 6

Outcome depth_consistency() {
  Outcome o;
  const std::vector<std::pair<std::string, GroupTable>> groups = {
      {"C2", cyclic_group(2)}, {"C3", cyclic_group(3)}, {"C4", cyclic_group(4)}, {"S3", symmetric_group_3()}};
  for (const auto& [name, g] : groups) {
    for (std::uint64_t p : {2, 3}) {
      const std::size_t s = p_valuation(g.order(), p);
      if (s == 0) continue;
      for (std::size_t n = 1; n <= 3; ++n) {
        const CoefficientRing ring(p, n);
        const auto a = group_algebra(g, ring);
        const Bimodule t = regular_bimodule(*a);
        const auto gens = cocycle_generators(*a, t);
        bool solved = true;
        for (const auto& v : gens) {
          const Cochain2 c = unflatten(v, a->rank() * a->rank(), a->rank());
          try {
            const Cochain1 h = solve_coboundary(*a, t, c, s);
            solved = solved && d1(*a, t, h) == scale(ring, ring.mul_p_power(ring.one(), s), c);
          } catch (const NotCoboundary&) {
            solved = false;
          }
        }
        const auto h1 = h1_invariants(*a, t);
        bool divides = true;
        for (std::size_t e : h1) divides = divides && e <= s;
        const std::string key = name + "/p" + std::to_string(p) + "/n" + std::to_string(n);
        o.require(solved, key + ": cocycle not solvable at s = v_p(|G|)");
        o.require(divides, key + ": H^1 exponent exceeds p^s");
        o.report[key] = {{"cocycles", gens.size()}, {"solved", solved}, {"h1", h1}, {"s", s}};
      }
    }
  }
  return o;
}

// ---------------------------------------------------------------- criterion 7

Outcome maranda() {
  Outcome o;
  for (std::size_t n : {3u, 4u}) {
    const CoefficientRing ring(3, n);
    const auto a = group_algebra(cyclic_group(3), ring);
    Matrix square(3, 3);
    for (std::size_t g = 0; g < 3; ++g) square.at(g, (2 * g) % 3) = ring.one();
    const Morphism id = identity_morphism(a);
    const Morphism inv = certify({a, square});
    const Element u = a->add(a->identity(), a->scale(ring.from_int(3), a->basis(1)));
    const Morphism twist = inner_from_unit(a, u);
    const std::vector<std::pair<std::string, Morphism>> maps = {
        {"id", id}, {"inv", inv}, {"inner", twist}, {"inv*inner", compose(inv, twist)}};
    Json pairs = Json::object();
    for (const auto& [na, ma] : maps) {
      for (const auto& [nb, mb] : maps) {
        const MarandaReport r = maranda_probe(ma, mb, 3);
        o.require(r.agree && !r.counterexample_candidate && !r.inconclusive,
                  "status changed for " + na + ", " + nb);
        pairs[na + "," + nb] = {{"full", to_string(r.full.outcome)}, {"truncated", to_string(r.truncated.outcome)}};
      }
    }
    o.report["N" + std::to_string(n)] = pairs;
  }
  return o;
}

// ---------------------------------------------------------------- criterion 8

// Checks that `iso` is a permutation matrix pi with c'(i,j,v) = c(pi i, pi j, pi v).
bool constants_match(const Algebra& source, const Algebra& target, const Matrix& iso) {
  const CoefficientRing& ring = source.ring();
  const std::size_t r = source.rank();
  std::vector<std::size_t> pi(r, r);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      if (ring.is_zero(iso.at(i, j))) continue;
      if (!ring.is_one(iso.at(i, j)) || pi[i] != r) return false;
      pi[i] = j;
    }
    if (pi[i] == r) return false;
  }
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      for (std::size_t v = 0; v < r; ++v) {
        if (source.constant(i, j, v) != target.constant(pi[i], pi[j], pi[v])) return false;
      }
    }
  }
  return true;
}

Outcome reconstruction() {
  Outcome o;
  struct Case {
    std::string name;
    GroupTable group;
    std::vector<std::size_t> normal;
    CoefficientRing ring;
  };
  const std::vector<Case> cases = {{"S3/A3", symmetric_group_3(), {0, 3, 4}, CoefficientRing(3, 2)},
                                   {"C4/C2", cyclic_group(4), {0, 2}, CoefficientRing(2, 2)}};
  for (const auto& c : cases) {
    const auto gp = group_algebra_parameter_set(c.group, c.normal, c.ring);
    const CrossedProduct cp = build_crossed_product(gp.parameters);
    const auto full = group_algebra(c.group, c.ring);
    const bool iso = check_algebra_map(*cp.algebra, *full, gp.isomorphism).ok();
    const bool entrywise = constants_match(*cp.algebra, *full, gp.isomorphism);
    o.require(iso && entrywise, c.name + ": reconstruction failed");
    bool nontrivial_gamma = false;
    for (const auto& g : gp.parameters.gamma) nontrivial_gamma |= g != gp.parameters.ring->identity();
    if (c.name == "C4/C2") o.require(nontrivial_gamma, "C4/C2: gamma is trivial");
    o.report[c.name] = {{"isomorphism", iso}, {"constants_match", entrywise},
                        {"nontrivial_gamma", nontrivial_gamma},
                        {"parameter_set", io::parameter_set_to_json(gp.parameters)}};
  }
  return o;
}

// ---------------------------------------------------------------- criterion 9

Outcome classification() {
  Outcome o;
  const auto R = group_algebra(GroupTable(), CoefficientRing(3, 2));
  const EnumerationReport r = enumerate_crossed_products(R, cyclic_group(2), {});
  o.require(r.classes.size() == 2, "expected 2 classes, found " + std::to_string(r.classes.size()));
  o.require(r.pairwise_inequivalent, "pairwise inequivalence not certified");
  o.require(r.coverage_certified, "coverage not certified");
  o.report = io::enumeration_to_json(r);
  return o;
}

// ---------------------------------------------------------------- criterion 10

Outcome condensation() {
  Outcome o;
  const fixtures::CondenseCase c = fixtures::m2_c2_condense();
  const CrossedProduct gamma = build_crossed_product(c.parameters);
  const CondensedCrossedProduct cc = condense_crossed(gamma, c.idempotent);
  o.require(validate_parameter_set(cc.product.parameters).ok(), "condensed parameter set invalid");
  const Decondensation d = decondense(gamma, cc, c.column_units, c.row_units);
  const MapCheck iso = check_algebra_map(*d.matrices.algebra, *gamma.algebra, d.map);
  const auto grading = matrix_grading(d, cc.product);
  const CoefficientRing& ring = gamma.algebra->ring();
  bool graded = true;
  for (std::size_t a = 0; a < d.map.rows; ++a) {
    for (std::size_t b = 0; b < d.map.cols; ++b) {
      if (!ring.is_zero(d.map.at(a, b)) && grading[a] != gamma.degree[b]) graded = false;
    }
  }
  o.require(iso.ok(), "decondensation is not an isomorphism: " + iso.describe());
  o.require(graded, "decondensation is not graded");
  o.report = {{"corner_rank", cc.corner.corner->rank()},
              {"condensed", io::parameter_set_to_json(cc.product.parameters)},
              {"isomorphism", io::map_check_to_json(iso)},
              {"graded", graded}};
  return o;
}

struct Criterion {
  int number;
  std::string title;
  double budget_seconds;
  std::function<Outcome()> run;
};

std::string cli_report(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  cli::run(args, out, err);
  return out.str();
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "Witt-ring oracle equivalence", 1, witt_oracle},
      {2, "p-identity in W_3(F_p)", 1, p_identity},
      {3, "inversion formula", 1, inversion_formula},
      {4, "automorphism equations on W_2(F_3)[C_3]", 5, automorphism_equations},
      {5, "Higman lift end-to-end", 10, higman_lift_run},
      {6, "depth consistency", 60, depth_consistency},
      {7, "Maranda probe", 10, maranda},
      {8, "crossed-product reconstruction", 5, reconstruction},
      {9, "classification of (W_2(F_3), C_2)", 60, classification},
      {10, "condensation and decondensation", 10, condensation},
  };

  int failures = 0;
  std::vector<std::string> first_reports;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.pass && seconds > c.budget_seconds) {
      o.pass = false;
      o.detail = "runtime budget exceeded";
    }
    first_reports.push_back(o.report.dump());
    std::printf("criterion %2d: %s  %s (%.2fs)%s%s\n", c.number, o.pass ? "PASS" : "FAIL", c.title.c_str(),
                seconds, o.detail.empty() ? "" : "  ", o.detail.c_str());
    if (!o.pass) ++failures;
  }

  // Criterion 11: rerun everything with the same seed and compare bytes,
  // including reports written by the command-line tool.
  bool identical = true;
  std::string detail;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    std::string again;
    try {
      again = criteria[k].run().report.dump();
    } catch (const std::exception& e) {
      again = e.what();
    }
    if (again != first_reports[k]) {
      identical = false;
      detail = "criterion " + std::to_string(criteria[k].number) + " report changed";
      break;
    }
  }
  const auto dir = std::filesystem::temp_directory_path();
  const std::string enumerate = (dir / "wittorders_acceptance_enumerate.json").string();
  const std::string lift = (dir / "wittorders_acceptance_lift.json").string();
  std::ofstream(enumerate) << fixtures::fixture("w2f3-c2-enumerate").dump();
  std::ofstream(lift) << fixtures::fixture("z81-c3-lift").dump();
  const std::vector<std::vector<std::string>> commands = {
      {"--seed", "17", "fixture", "s3-a3-crossed"},
      {"--seed", "17", "witt", "--p", "3", "--n", "3", "--op", "polys"},
      {"--seed", "17", "enumerate", enumerate},
      {"--seed", "17", "lift", "--s", "1", "--target-precision", "4", lift},
  };
  for (const auto& args : commands) {
    if (cli_report(args) != cli_report(args)) {
      identical = false;
      detail = "CLI report changed";
    }
  }
  std::printf("criterion 11: %s  determinism of reports%s%s\n", identical ? "PASS" : "FAIL",
              detail.empty() ? "" : "  ", detail.c_str());
  if (!identical) ++failures;

  std::printf("%d of 11 criteria passed\n", 11 - failures);
  return failures == 0 ? 0 : 1;
}
