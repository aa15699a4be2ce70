#include "wittorders/algebra.hpp"

#include <string>

#include "wittorders/errors.hpp"

namespace wittorders {

AlgebraPtr Algebra::make(CoefficientRing ring, std::size_t rank, std::vector<Scalar> dense_constants,
                         Element identity, const Guards& guards) {
  if (rank == 0) throw InvalidInput("algebra rank must be positive");
  if (rank > guards.max_rank) {
    throw CostGuardExceeded("algebra rank " + std::to_string(rank) + " exceeds max-rank " +
                            std::to_string(guards.max_rank));
  }
  if (dense_constants.size() != rank * rank * rank) {
    throw DimensionMismatch("expected rank^3 structure constants");
  }
  if (identity.size() != rank) throw DimensionMismatch("identity has wrong length");
  auto algebra = std::shared_ptr<Algebra>(
      new Algebra(std::move(ring), rank, std::move(dense_constants), std::move(identity)));
  const CoefficientRing& R = algebra->ring_;
  for (auto& x : algebra->constants_) x = R.truncate_from(x);
  for (auto& x : algebra->identity_) x = R.truncate_from(x);

  // (b_i b_j) b_l = sum_v c(i,j,v) c(v,l,w) against b_i (b_j b_l) = sum_v c(j,l,v) c(i,v,w).
  for (std::size_t i = 0; i < rank; ++i) {
    for (std::size_t j = 0; j < rank; ++j) {
      for (std::size_t l = 0; l < rank; ++l) {
        for (std::size_t w = 0; w < rank; ++w) {
          Scalar lhs;
          Scalar rhs;
          for (std::size_t v = 0; v < rank; ++v) {
            lhs = R.add(lhs, R.mul(algebra->constant(i, j, v), algebra->constant(v, l, w)));
            rhs = R.add(rhs, R.mul(algebra->constant(j, l, v), algebra->constant(i, v, w)));
          }
          if (lhs != rhs) throw AssociativityViolation(i, j, l);
        }
      }
    }
  }
  for (std::size_t i = 0; i < rank; ++i) {
    const Element b = algebra->basis(i);
    if (algebra->multiply(algebra->identity_, b) != b || algebra->multiply(b, algebra->identity_) != b) {
      throw IdentityViolation(i);
    }
  }
  return algebra;
}

AlgebraPtr Algebra::make_sparse(CoefficientRing ring, std::size_t rank,
                                const std::vector<SparseConstant>& constants, Element identity,
                                const Guards& guards) {
  std::vector<Scalar> dense(rank * rank * rank);
  for (const auto& c : constants) {
    if (c.i >= rank || c.j >= rank || c.v >= rank) {
      throw DimensionMismatch("structure constant index out of range");
    }
    auto& slot = dense[(c.i * rank + c.j) * rank + c.v];
    slot = ring.add(slot, c.value);
  }
  return make(std::move(ring), rank, std::move(dense), std::move(identity), guards);
}

AlgebraPtr Algebra::with_separable_ambient(bool flag) const {
  auto copy = std::shared_ptr<Algebra>(new Algebra(ring_, rank_, constants_, identity_));
  copy->separable_ambient_ = flag;
  return copy;
}

void Algebra::check(const Element& a) const {
  if (a.size() != rank_) {
    throw DimensionMismatch("element of length " + std::to_string(a.size()) +
                            " used in an algebra of rank " + std::to_string(rank_));
  }
}

Element Algebra::basis(std::size_t i) const {
  Element e(rank_);
  e.at(i) = ring_.one();
  return e;
}

Element Algebra::scalar(const Scalar& s) const { return scale(s, identity_); }

Element Algebra::add(const Element& a, const Element& b) const {
  check(a);
  check(b);
  Element r(rank_);
  for (std::size_t i = 0; i < rank_; ++i) r[i] = ring_.add(a[i], b[i]);
  return r;
}

Element Algebra::sub(const Element& a, const Element& b) const {
  check(a);
  check(b);
  Element r(rank_);
  for (std::size_t i = 0; i < rank_; ++i) r[i] = ring_.sub(a[i], b[i]);
  return r;
}

Element Algebra::neg(const Element& a) const { return sub(zero(), a); }

Element Algebra::scale(const Scalar& s, const Element& a) const {
  check(a);
  Element r(rank_);
  for (std::size_t i = 0; i < rank_; ++i) r[i] = ring_.mul(s, a[i]);
  return r;
}

Element Algebra::multiply(const Element& a, const Element& b) const {
  check(a);
  check(b);
  Element r(rank_);
  for (std::size_t i = 0; i < rank_; ++i) {
    if (ring_.is_zero(a[i])) continue;
    for (std::size_t j = 0; j < rank_; ++j) {
      if (ring_.is_zero(b[j])) continue;
      const Scalar t = ring_.mul(a[i], b[j]);
      const Scalar* c = &constants_[(i * rank_ + j) * rank_];
      for (std::size_t v = 0; v < rank_; ++v) {
        if (!ring_.is_zero(c[v])) r[v] = ring_.add(r[v], ring_.mul(t, c[v]));
      }
    }
  }
  return r;
}

Matrix Algebra::left_regular(const Element& a) const {
  check(a);
  Matrix m(rank_, rank_);
  for (std::size_t j = 0; j < rank_; ++j) {
    const Element column = multiply(a, basis(j));
    for (std::size_t v = 0; v < rank_; ++v) m.at(v, j) = column[v];
  }
  return m;
}

Matrix Algebra::right_regular(const Element& a) const {
  check(a);
  Matrix m(rank_, rank_);
  for (std::size_t i = 0; i < rank_; ++i) {
    const Element column = multiply(basis(i), a);
    for (std::size_t v = 0; v < rank_; ++v) m.at(v, i) = column[v];
  }
  return m;
}

bool Algebra::is_unit(const Element& a) const { return is_invertible(ring_, left_regular(a)); }

Element Algebra::unit_inverse(const Element& a) const {
  const Matrix left = left_regular(a);
  if (!is_invertible(ring_, left)) throw NotAUnit("element is not a unit of the algebra");
  // a x = 1 has the unique solution x = left(a)^-1 * 1.
  Element x = matvec(ring_, inverse(ring_, left), identity_);
  if (multiply(x, a) != identity_) throw Error("internal: one-sided inverse in a finite ring");
  return x;
}

bool Algebra::is_central(const Element& z) const {
  for (std::size_t i = 0; i < rank_; ++i) {
    const Element b = basis(i);
    if (multiply(z, b) != multiply(b, z)) return false;
  }
  return true;
}

bool Algebra::is_commutative() const {
  for (std::size_t i = 0; i < rank_; ++i) {
    for (std::size_t j = 0; j < rank_; ++j) {
      for (std::size_t v = 0; v < rank_; ++v) {
        if (constant(i, j, v) != constant(j, i, v)) return false;
      }
    }
  }
  return true;
}

AlgebraPtr Algebra::truncated(std::size_t m) const {
  const CoefficientRing target = ring_.truncated(m);
  auto copy = std::shared_ptr<Algebra>(new Algebra(target, rank_, constants_, identity_));
  for (auto& x : copy->constants_) x = target.truncate_from(x);
  for (auto& x : copy->identity_) x = target.truncate_from(x);
  copy->separable_ambient_ = separable_ambient_;
  return copy;
}

std::vector<Element> Algebra::center_generators() const {
  // z b_i - b_i z = (right(b_i) - left(b_i)) z = 0 for all i.
  Matrix system(rank_ * rank_, rank_);
  for (std::size_t i = 0; i < rank_; ++i) {
    const Matrix diff = wittorders::sub(ring_, right_regular(basis(i)), left_regular(basis(i)));
    for (std::size_t v = 0; v < rank_; ++v) {
      for (std::size_t k = 0; k < rank_; ++k) system.at(i * rank_ + v, k) = diff.at(v, k);
    }
  }
  const LinearSystem solver(ring_, system);
  const HowellForm form = solver.kernel_form();
  std::vector<Element> gens;
  for (std::size_t r = 0; r < form.rows.rows; ++r) gens.push_back(form.rows.row(r));
  return gens;
}

AlgebraPtr group_algebra(const GroupTable& group, const CoefficientRing& ring, const Guards& guards) {
  const std::size_t n = group.order();
  std::vector<Scalar> constants(n * n * n);
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t h = 0; h < n; ++h) constants[(g * n + h) * n + group.mul(g, h)] = ring.one();
  }
  Element identity(n);
  identity[group.identity()] = ring.one();
  return Algebra::make(ring, n, std::move(constants), std::move(identity), guards);
}

AlgebraPtr restriction_of_scalars(const CoefficientRing& ring, const Guards& guards) {
  const std::size_t d = ring.degree();
  const CoefficientRing base(ring.p(), ring.length());
  std::vector<Scalar> constants(d * d * d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      Scalar xi;
      Scalar xj;
      xi.c[i] = 1;
      xj.c[j] = 1;
      const Scalar product = ring.mul(xi, xj);
      for (std::size_t v = 0; v < d; ++v) constants[(i * d + j) * d + v].c[0] = product.c[v];
    }
  }
  Element identity(d);
  identity[0] = base.one();
  return Algebra::make(base, d, std::move(constants), std::move(identity), guards);
}

Matrix scalar_action_matrix(const CoefficientRing& ring, const Scalar& s) {
  const std::size_t d = ring.degree();
  Matrix m(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    Scalar xi;
    xi.c[i] = 1;
    const Scalar image = ring.mul(s, xi);
    for (std::size_t v = 0; v < d; ++v) m.at(i, v).c[0] = image.c[v];
  }
  return m;
}

Element MatrixRing::unit(std::size_t a, std::size_t b, const Element& x) const {
  Element e(algebra->rank());
  for (std::size_t i = 0; i < inner_rank; ++i) e[index(a, b, i)] = x.at(i);
  return e;
}

MatrixRing matrix_ring(const AlgebraPtr& inner, std::size_t m, const Guards& guards) {
  if (m == 0) throw InvalidInput("matrix size must be at least 1");
  const std::size_t r = inner->rank();
  const std::size_t rank = m * m * r;
  if (rank > guards.max_rank) throw CostGuardExceeded("matrix ring rank exceeds max-rank");
  MatrixRing result;
  result.size = m;
  result.inner_rank = r;
  std::vector<Scalar> constants(rank * rank * rank);
  // (E_ab x_i)(E_cd x_j) = delta_bc E_ad (x_i x_j)
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      for (std::size_t d = 0; d < m; ++d) {
        for (std::size_t i = 0; i < r; ++i) {
          for (std::size_t j = 0; j < r; ++j) {
            for (std::size_t v = 0; v < r; ++v) {
              const std::size_t left = result.index(a, b, i);
              const std::size_t right = result.index(b, d, j);
              constants[(left * rank + right) * rank + result.index(a, d, v)] =
                  inner->constant(i, j, v);
            }
          }
        }
      }
    }
  }
  Element identity(rank);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t i = 0; i < r; ++i) identity[result.index(a, a, i)] = inner->identity()[i];
  }
  result.algebra = Algebra::make(inner->ring(), rank, std::move(constants), identity, guards);
  for (std::size_t a = 0; a < m; ++a) {
    result.diagonal_idempotents.push_back(result.unit(a, a, inner->identity()));
  }
  return result;
}

Element Condensation::embed(const Element& corner_element) const {
  const CoefficientRing& ring = corner->ring();
  return vecmat(ring, corner_element, embedding);
}

Element Condensation::coordinates(const CoefficientRing& ring, const Element& ambient) const {
  Element coords(pivot_columns.size());
  for (std::size_t k = 0; k < pivot_columns.size(); ++k) coords[k] = ambient.at(pivot_columns[k]);
  if (vecmat(ring, coords, embedding) != ambient) {
    throw InvalidInput("element does not lie in the condensed corner");
  }
  return coords;
}

Condensation condense(const AlgebraPtr& algebra, const Element& e, const Guards& guards) {
  algebra->check(e);
  if (!algebra->is_idempotent(e)) throw NotIdempotent("condensation needs e*e = e");
  const CoefficientRing& ring = algebra->ring();
  const std::size_t r = algebra->rank();
  Matrix images(r, r);
  for (std::size_t i = 0; i < r; ++i) images.set_row(i, algebra->product(e, algebra->basis(i), e));
  const HowellForm form = howell_form(ring, images);
  for (const std::size_t v : form.pivot_vals) {
    if (v != 0) throw NonFreeCorner("the corner eAe is not a free module over the coefficients");
  }
  Condensation result;
  result.embedding = form.rows;
  result.pivot_columns = form.pivot_cols;
  result.idempotent = e;
  const std::size_t k = form.rows.rows;
  if (k == 0) throw InvalidInput("condensation at the zero idempotent");
  std::vector<Scalar> constants(k * k * k);
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      const Element product = algebra->multiply(form.rows.row(a), form.rows.row(b));
      const Element coords = result.coordinates(ring, product);
      for (std::size_t v = 0; v < k; ++v) constants[(a * k + b) * k + v] = coords[v];
    }
  }
  const Element identity = result.coordinates(ring, e);
  result.corner = Algebra::make(ring, k, std::move(constants), identity, guards);
  return result;
}

AlgebraPtr tensor_opposite(const AlgebraPtr& algebra, const Guards& guards) {
  const std::size_t r = algebra->rank();
  const std::size_t rank = r * r;
  if (rank > guards.max_rank) throw CostGuardExceeded("tensor with opposite exceeds max-rank");
  const CoefficientRing& ring = algebra->ring();
  std::vector<Scalar> constants(rank * rank * rank);
  // (b_i (x) b_i')(b_j (x) b_j') = b_i b_j (x) b_j' b_i'
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t ip = 0; ip < r; ++ip) {
      for (std::size_t j = 0; j < r; ++j) {
        for (std::size_t jp = 0; jp < r; ++jp) {
          for (std::size_t v = 0; v < r; ++v) {
            const Scalar& c = algebra->constant(i, j, v);
            if (ring.is_zero(c)) continue;
            for (std::size_t vp = 0; vp < r; ++vp) {
              constants[((i * r + ip) * rank + (j * r + jp)) * rank + (v * r + vp)] =
                  ring.mul(c, algebra->constant(jp, ip, vp));
            }
          }
        }
      }
    }
  }
  Element identity(rank);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t ip = 0; ip < r; ++ip) {
      identity[i * r + ip] = ring.mul(algebra->identity()[i], algebra->identity()[ip]);
    }
  }
  return Algebra::make(ring, rank, std::move(constants), std::move(identity), guards);
}

}  // namespace wittorders
