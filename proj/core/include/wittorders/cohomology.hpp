#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "wittorders/algebra.hpp"
#include "wittorders/morphism.hpp"

namespace wittorders {

// A Lambda-Lambda-bimodule T that is free of rank t over the coefficients.
// left[i] and right[i] are the t x t matrices of x -> b_i . x and x -> x . b_i
// acting on coordinate columns.
struct Bimodule {
  std::size_t rank = 0;
  std::vector<Matrix> left;
  std::vector<Matrix> right;

  Vector act_left(const CoefficientRing& ring, std::size_t i, const Vector& x) const;
  Vector act_right(const CoefficientRing& ring, const Vector& x, std::size_t i) const;
};

// Lambda as a bimodule over itself.
Bimodule regular_bimodule(const Algebra& algebra);
// Lambda with both actions twisted by alpha: x . t . y = alpha(x) t alpha(y).
Bimodule twisted_bimodule(const Algebra& algebra, const Matrix& alpha);

// Cochains are stored on basis tuples. A 1-cochain is an r x t matrix whose
// row i is h(b_i); a 2-cochain is an r^2 x t matrix whose row i*r+j is
// f(b_i (x) b_j).
using Cochain1 = Matrix;
using Cochain2 = Matrix;

// (d0 t)(x) = x t - t x.
Cochain1 d0(const Algebra& algebra, const Bimodule& module, const Vector& t);
// (d1 h)(x (x) y) = x h(y) + h(x) y - h(xy).
Cochain2 d1(const Algebra& algebra, const Bimodule& module, const Cochain1& h);

// Matrices of d0, d1, d2 acting on flattened cochains (row-major order of the
// cochain matrices) as columns.
Matrix d0_matrix(const Algebra& algebra, const Bimodule& module);
Matrix d1_matrix(const Algebra& algebra, const Bimodule& module);
Matrix d2_matrix(const Algebra& algebra, const Bimodule& module);

Vector flatten(const Matrix& m);
Matrix unflatten(const Vector& v, std::size_t rows, std::size_t cols);

struct CocycleCheck {
  bool ok = true;
  // Basis triple (i, j, l) and module coordinate of the first failure.
  std::optional<std::array<std::size_t, 4>> witness;
};

// x g(y,z) - g(xy,z) + g(x,yz) - g(x,y) z = 0 on all basis triples.
CocycleCheck is_2cocycle(const Algebra& algebra, const Bimodule& module, const Cochain2& g);

// Generators (Howell rows) of the module of 2-cocycles, as flattened cochains.
std::vector<Vector> cocycle_generators(const Algebra& algebra, const Bimodule& module);

// Some h with d1(h) = p^s g. Throws NotCoboundary.
Cochain1 solve_coboundary(const Algebra& algebra, const Bimodule& module, const Cochain2& g,
                          std::size_t s);

// Invariant-factor exponents of H^1(Lambda, T) = Z^1 / B^1, largest first.
// Throws CostGuardExceeded if r * t exceeds the rank guard squared.
std::vector<std::size_t> h1_invariants(const Algebra& algebra, const Bimodule& module,
                                       const Guards& guards = {});

}  // namespace wittorders
