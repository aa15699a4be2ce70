#include "wittorders/cohomology.hpp"

#include "wittorders/errors.hpp"

namespace wittorders {

Vector Bimodule::act_left(const CoefficientRing& ring, std::size_t i, const Vector& x) const {
  return matvec(ring, left.at(i), x);
}

Vector Bimodule::act_right(const CoefficientRing& ring, const Vector& x, std::size_t i) const {
  return matvec(ring, right.at(i), x);
}

Bimodule regular_bimodule(const Algebra& algebra) {
  Bimodule m;
  m.rank = algebra.rank();
  for (std::size_t i = 0; i < algebra.rank(); ++i) {
    m.left.push_back(algebra.left_regular(algebra.basis(i)));
    m.right.push_back(algebra.right_regular(algebra.basis(i)));
  }
  return m;
}

Bimodule twisted_bimodule(const Algebra& algebra, const Matrix& alpha) {
  Bimodule m;
  m.rank = algebra.rank();
  for (std::size_t i = 0; i < algebra.rank(); ++i) {
    m.left.push_back(algebra.left_regular(alpha.row(i)));
    m.right.push_back(algebra.right_regular(alpha.row(i)));
  }
  return m;
}

namespace {

void check_module(const Algebra& algebra, const Bimodule& module) {
  if (module.left.size() != algebra.rank() || module.right.size() != algebra.rank()) {
    throw DimensionMismatch("bimodule action count differs from the algebra rank");
  }
}

// Adds s * block into m at (row0, col0).
void add_block(const CoefficientRing& ring, Matrix& m, std::size_t row0, std::size_t col0,
               const Matrix& block, const Scalar& s) {
  for (std::size_t a = 0; a < block.rows; ++a) {
    for (std::size_t b = 0; b < block.cols; ++b) {
      if (ring.is_zero(block.at(a, b))) continue;
      Scalar& slot = m.at(row0 + a, col0 + b);
      slot = ring.add(slot, ring.mul(s, block.at(a, b)));
    }
  }
}

void add_scalar_identity(const CoefficientRing& ring, Matrix& m, std::size_t row0,
                         std::size_t col0, std::size_t t, const Scalar& s) {
  for (std::size_t a = 0; a < t; ++a) {
    Scalar& slot = m.at(row0 + a, col0 + a);
    slot = ring.add(slot, s);
  }
}

}  // namespace

Vector flatten(const Matrix& m) { return m.data; }

Matrix unflatten(const Vector& v, std::size_t rows, std::size_t cols) {
  if (v.size() != rows * cols) throw DimensionMismatch("cannot reshape cochain");
  Matrix m(rows, cols);
  m.data = v;
  return m;
}

Matrix d0_matrix(const Algebra& algebra, const Bimodule& module) {
  check_module(algebra, module);
  const CoefficientRing& ring = algebra.ring();
  const std::size_t r = algebra.rank();
  const std::size_t t = module.rank;
  Matrix d(r * t, t);
  for (std::size_t i = 0; i < r; ++i) {
    add_block(ring, d, i * t, 0, module.left[i], ring.one());
    add_block(ring, d, i * t, 0, module.right[i], ring.neg(ring.one()));
  }
  return d;
}

Matrix d1_matrix(const Algebra& algebra, const Bimodule& module) {
  check_module(algebra, module);
  const CoefficientRing& ring = algebra.ring();
  const std::size_t r = algebra.rank();
  const std::size_t t = module.rank;
  Matrix d(r * r * t, r * t);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      const std::size_t row0 = (i * r + j) * t;
      add_block(ring, d, row0, j * t, module.left[i], ring.one());
      add_block(ring, d, row0, i * t, module.right[j], ring.one());
      for (std::size_t w = 0; w < r; ++w) {
        const Scalar& c = algebra.constant(i, j, w);
        if (!ring.is_zero(c)) add_scalar_identity(ring, d, row0, w * t, t, ring.neg(c));
      }
    }
  }
  return d;
}

Matrix d2_matrix(const Algebra& algebra, const Bimodule& module) {
  check_module(algebra, module);
  const CoefficientRing& ring = algebra.ring();
  const std::size_t r = algebra.rank();
  const std::size_t t = module.rank;
  Matrix d(r * r * r * t, r * r * t);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      for (std::size_t l = 0; l < r; ++l) {
        const std::size_t row0 = ((i * r + j) * r + l) * t;
        add_block(ring, d, row0, (j * r + l) * t, module.left[i], ring.one());
        add_block(ring, d, row0, (i * r + j) * t, module.right[l], ring.neg(ring.one()));
        for (std::size_t w = 0; w < r; ++w) {
          const Scalar& a = algebra.constant(i, j, w);
          if (!ring.is_zero(a)) add_scalar_identity(ring, d, row0, (w * r + l) * t, t, ring.neg(a));
          const Scalar& b = algebra.constant(j, l, w);
          if (!ring.is_zero(b)) add_scalar_identity(ring, d, row0, (i * r + w) * t, t, b);
        }
      }
    }
  }
  return d;
}

Cochain1 d0(const Algebra& algebra, const Bimodule& module, const Vector& t) {
  if (t.size() != module.rank) throw DimensionMismatch("0-cochain has wrong length");
  return unflatten(matvec(algebra.ring(), d0_matrix(algebra, module), t), algebra.rank(),
                   module.rank);
}

Cochain2 d1(const Algebra& algebra, const Bimodule& module, const Cochain1& h) {
  if (h.rows != algebra.rank() || h.cols != module.rank) {
    throw DimensionMismatch("1-cochain has wrong shape");
  }
  const CoefficientRing& ring = algebra.ring();
  const std::size_t r = algebra.rank();
  Cochain2 f(r * r, module.rank);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      Vector value = module.act_left(ring, i, h.row(j));
      const Vector right = module.act_right(ring, h.row(i), j);
      for (std::size_t a = 0; a < module.rank; ++a) value[a] = ring.add(value[a], right[a]);
      for (std::size_t w = 0; w < r; ++w) {
        const Scalar& c = algebra.constant(i, j, w);
        if (ring.is_zero(c)) continue;
        for (std::size_t a = 0; a < module.rank; ++a) {
          value[a] = ring.sub(value[a], ring.mul(c, h.at(w, a)));
        }
      }
      f.set_row(i * r + j, value);
    }
  }
  return f;
}

CocycleCheck is_2cocycle(const Algebra& algebra, const Bimodule& module, const Cochain2& g) {
  check_module(algebra, module);
  const std::size_t r = algebra.rank();
  const std::size_t t = module.rank;
  if (g.rows != r * r || g.cols != t) throw DimensionMismatch("2-cochain has wrong shape");
  const CoefficientRing& ring = algebra.ring();
  CocycleCheck result;
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      for (std::size_t l = 0; l < r; ++l) {
        Vector value = module.act_left(ring, i, g.row(j * r + l));
        const Vector right = module.act_right(ring, g.row(i * r + j), l);
        for (std::size_t a = 0; a < t; ++a) value[a] = ring.sub(value[a], right[a]);
        for (std::size_t w = 0; w < r; ++w) {
          const Scalar& x = algebra.constant(i, j, w);
          const Scalar& y = algebra.constant(j, l, w);
          for (std::size_t a = 0; a < t; ++a) {
            if (!ring.is_zero(x)) value[a] = ring.sub(value[a], ring.mul(x, g.at(w * r + l, a)));
            if (!ring.is_zero(y)) value[a] = ring.add(value[a], ring.mul(y, g.at(i * r + w, a)));
          }
        }
        for (std::size_t a = 0; a < t; ++a) {
          if (!ring.is_zero(value[a])) {
            result.ok = false;
            result.witness = std::array<std::size_t, 4>{i, j, l, a};
            return result;
          }
        }
      }
    }
  }
  return result;
}

std::vector<Vector> cocycle_generators(const Algebra& algebra, const Bimodule& module) {
  const LinearSystem system(algebra.ring(), d2_matrix(algebra, module));
  const HowellForm form = system.kernel_form();
  std::vector<Vector> gens;
  for (std::size_t k = 0; k < form.rows.rows; ++k) gens.push_back(form.rows.row(k));
  return gens;
}

Cochain1 solve_coboundary(const Algebra& algebra, const Bimodule& module, const Cochain2& g,
                          std::size_t s) {
  const std::size_t r = algebra.rank();
  if (g.rows != r * r || g.cols != module.rank) throw DimensionMismatch("2-cochain has wrong shape");
  const CoefficientRing& ring = algebra.ring();
  Vector rhs = flatten(g);
  for (auto& x : rhs) x = ring.mul_p_power(x, s);
  const LinearSystem system(ring, d1_matrix(algebra, module));
  const auto h = system.try_solve(rhs);
  if (!h) {
    throw NotCoboundary("p^" + std::to_string(s) + " * g is not a coboundary");
  }
  return unflatten(*h, r, module.rank);
}

std::vector<std::size_t> h1_invariants(const Algebra& algebra, const Bimodule& module,
                                       const Guards& guards) {
  const std::size_t cols = algebra.rank() * module.rank;
  if (cols > guards.max_rank * guards.max_rank) {
    throw CostGuardExceeded("1-cochain space too large for h1_invariants");
  }
  const CoefficientRing& ring = algebra.ring();
  const LinearSystem cocycles(ring, d1_matrix(algebra, module));
  const Matrix boundary = d0_matrix(algebra, module);
  std::vector<Vector> coboundaries;
  for (std::size_t c = 0; c < boundary.cols; ++c) {
    Vector column(boundary.rows);
    for (std::size_t row = 0; row < boundary.rows; ++row) column[row] = boundary.at(row, c);
    coboundaries.push_back(std::move(column));
  }
  return quotient_invariants(ring, cocycles.kernel(), coboundaries, cols);
}

}  // namespace wittorders
