#include "wittorders/linalg.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "wittorders/errors.hpp"

namespace wittorders {

void Matrix::set_row(std::size_t i, const Vector& v) {
  if (v.size() != cols) throw DimensionMismatch("row length does not match matrix width");
  std::copy(v.begin(), v.end(), data.begin() + static_cast<std::ptrdiff_t>(i * cols));
}

Matrix identity_matrix(const CoefficientRing& ring, std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = ring.one();
  return m;
}

Matrix matmul(const CoefficientRing& ring, const Matrix& a, const Matrix& b) {
  if (a.cols != b.rows) throw DimensionMismatch("matrix product dimensions disagree");
  Matrix r(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i) {
    for (std::size_t k = 0; k < a.cols; ++k) {
      const Scalar& x = a.at(i, k);
      if (ring.is_zero(x)) continue;
      for (std::size_t j = 0; j < b.cols; ++j) {
        r.at(i, j) = ring.add(r.at(i, j), ring.mul(x, b.at(k, j)));
      }
    }
  }
  return r;
}

Matrix transpose(const Matrix& a) {
  Matrix r(a.cols, a.rows);
  for (std::size_t i = 0; i < a.rows; ++i) {
    for (std::size_t j = 0; j < a.cols; ++j) r.at(j, i) = a.at(i, j);
  }
  return r;
}

Matrix add(const CoefficientRing& ring, const Matrix& a, const Matrix& b) {
  if (a.rows != b.rows || a.cols != b.cols) throw DimensionMismatch("matrix sum dimensions");
  Matrix r(a.rows, a.cols);
  for (std::size_t i = 0; i < a.data.size(); ++i) r.data[i] = ring.add(a.data[i], b.data[i]);
  return r;
}

Matrix sub(const CoefficientRing& ring, const Matrix& a, const Matrix& b) {
  if (a.rows != b.rows || a.cols != b.cols) throw DimensionMismatch("matrix difference dimensions");
  Matrix r(a.rows, a.cols);
  for (std::size_t i = 0; i < a.data.size(); ++i) r.data[i] = ring.sub(a.data[i], b.data[i]);
  return r;
}

Matrix scale(const CoefficientRing& ring, const Scalar& s, const Matrix& a) {
  Matrix r(a.rows, a.cols);
  for (std::size_t i = 0; i < a.data.size(); ++i) r.data[i] = ring.mul(s, a.data[i]);
  return r;
}

Vector vecmat(const CoefficientRing& ring, const Vector& x, const Matrix& m) {
  if (x.size() != m.rows) throw DimensionMismatch("vector-matrix product dimensions");
  Vector r(m.cols);
  for (std::size_t i = 0; i < m.rows; ++i) {
    if (ring.is_zero(x[i])) continue;
    for (std::size_t j = 0; j < m.cols; ++j) r[j] = ring.add(r[j], ring.mul(x[i], m.at(i, j)));
  }
  return r;
}

Vector matvec(const CoefficientRing& ring, const Matrix& m, const Vector& x) {
  if (x.size() != m.cols) throw DimensionMismatch("matrix-vector product dimensions");
  Vector r(m.rows);
  for (std::size_t i = 0; i < m.rows; ++i) {
    for (std::size_t j = 0; j < m.cols; ++j) r[i] = ring.add(r[i], ring.mul(m.at(i, j), x[j]));
  }
  return r;
}

Matrix truncate(const CoefficientRing& target, const Matrix& a) {
  Matrix r = a;
  for (auto& x : r.data) x = target.truncate_from(x);
  return r;
}

Vector truncate(const CoefficientRing& target, const Vector& a) {
  Vector r = a;
  for (auto& x : r) x = target.truncate_from(x);
  return r;
}

namespace {

// Gauss-Jordan with unit pivots on [m | rhs]; false if m is singular mod p.
bool gauss_jordan(const CoefficientRing& ring, Matrix m, Matrix* rhs) {
  const std::size_t n = m.rows;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = n;
    for (std::size_t i = c; i < n; ++i) {
      if (ring.is_unit(m.at(i, c))) {
        pivot = i;
        break;
      }
    }
    if (pivot == n) return false;
    if (pivot != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m.at(c, j), m.at(pivot, j));
      if (rhs) {
        for (std::size_t j = 0; j < rhs->cols; ++j) std::swap(rhs->at(c, j), rhs->at(pivot, j));
      }
    }
    const Scalar inv = ring.inv(m.at(c, c));
    for (std::size_t j = 0; j < n; ++j) m.at(c, j) = ring.mul(inv, m.at(c, j));
    if (rhs) {
      for (std::size_t j = 0; j < rhs->cols; ++j) rhs->at(c, j) = ring.mul(inv, rhs->at(c, j));
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c) continue;
      const Scalar factor = m.at(i, c);
      if (ring.is_zero(factor)) continue;
      for (std::size_t j = 0; j < n; ++j) {
        m.at(i, j) = ring.sub(m.at(i, j), ring.mul(factor, m.at(c, j)));
      }
      if (rhs) {
        for (std::size_t j = 0; j < rhs->cols; ++j) {
          rhs->at(i, j) = ring.sub(rhs->at(i, j), ring.mul(factor, rhs->at(c, j)));
        }
      }
    }
  }
  return true;
}

}  // namespace

bool is_invertible(const CoefficientRing& ring, const Matrix& m) {
  if (m.rows != m.cols) return false;
  return gauss_jordan(ring, m, nullptr);
}

Matrix inverse(const CoefficientRing& ring, const Matrix& m) {
  if (m.rows != m.cols) throw DimensionMismatch("inverse of a non-square matrix");
  Matrix result = identity_matrix(ring, m.rows);
  if (!gauss_jordan(ring, m, &result)) throw NotAUnit("matrix is singular modulo p");
  return result;
}

std::size_t HowellForm::log_size(const CoefficientRing& ring) const {
  std::size_t total = 0;
  for (const std::size_t v : pivot_vals) total += ring.length() - v;
  return total;
}

HowellForm howell_form(const CoefficientRing& ring, const Matrix& m) {
  const std::size_t n = ring.length();
  std::vector<Vector> rows;
  rows.reserve(m.rows);
  for (std::size_t i = 0; i < m.rows; ++i) {
    Vector row = m.row(i);
    if (std::any_of(row.begin(), row.end(), [&](const Scalar& x) { return !ring.is_zero(x); })) {
      rows.push_back(std::move(row));
    }
  }
  HowellForm form;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < rows.size(); ++c) {
    std::size_t best = rows.size();
    std::size_t best_val = n;
    for (std::size_t i = r; i < rows.size(); ++i) {
      const std::size_t v = ring.valuation(rows[i][c]);
      if (v < best_val) {
        best_val = v;
        best = i;
        if (v == 0) break;
      }
    }
    if (best == rows.size()) continue;
    std::swap(rows[r], rows[best]);
    Vector& pivot_row = rows[r];
    const Scalar unit_inv = ring.inv(ring.unit_part(pivot_row[c]));
    for (std::size_t j = c; j < m.cols; ++j) pivot_row[j] = ring.mul(unit_inv, pivot_row[j]);

    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r) continue;
      const Scalar a = rows[i][c];
      if (ring.is_zero(a)) continue;
      Scalar q;
      if (i > r) {
        q = ring.div_p_power(a, best_val);
      } else {
        const Scalar rem = ring.mod_p_power(a, best_val);
        if (rem == a) continue;
        q = ring.div_p_power(ring.sub(a, rem), best_val);
      }
      for (std::size_t j = c; j < m.cols; ++j) {
        rows[i][j] = ring.sub(rows[i][j], ring.mul(q, pivot_row[j]));
      }
    }
    if (best_val > 0) {
      Vector extra(m.cols);
      bool nonzero = false;
      for (std::size_t j = c; j < m.cols; ++j) {
        extra[j] = ring.mul_p_power(pivot_row[j], n - best_val);
        nonzero = nonzero || !ring.is_zero(extra[j]);
      }
      if (nonzero) rows.push_back(std::move(extra));
    }
    form.pivot_cols.push_back(c);
    form.pivot_vals.push_back(best_val);
    ++r;
  }
  form.rows = Matrix(r, m.cols);
  for (std::size_t i = 0; i < r; ++i) form.rows.set_row(i, rows[i]);
  return form;
}

std::optional<std::size_t> reduce_by(const CoefficientRing& ring, const HowellForm& form,
                                     Vector& v, std::size_t limit) {
  for (std::size_t k = 0; k < form.pivot_cols.size(); ++k) {
    const std::size_t c = form.pivot_cols[k];
    if (c >= limit) break;
    const Scalar a = v[c];
    if (ring.is_zero(a)) continue;
    if (ring.valuation(a) < form.pivot_vals[k]) return k;
    const Scalar q = ring.div_p_power(a, form.pivot_vals[k]);
    for (std::size_t j = c; j < v.size(); ++j) {
      v[j] = ring.sub(v[j], ring.mul(q, form.rows.at(k, j)));
    }
  }
  return std::nullopt;
}

bool row_module_contains(const CoefficientRing& ring, const HowellForm& form, const Vector& v) {
  Vector w = v;
  if (reduce_by(ring, form, w, w.size())) return false;
  return std::all_of(w.begin(), w.end(), [&](const Scalar& x) { return ring.is_zero(x); });
}

Matrix LinearSystem::rows_to_matrix(const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
  return m;
}

LinearSystem::LinearSystem(CoefficientRing ring, Matrix a) : ring_(std::move(ring)), a_(std::move(a)) {
  const std::size_t m = a_.rows;
  const std::size_t k = a_.cols;
  Matrix augmented(k, m + k);
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t i = 0; i < m; ++i) augmented.at(j, i) = a_.at(i, j);
    augmented.at(j, m + j) = ring_.one();
  }
  augmented_ = howell_form(ring_, augmented);
  for (std::size_t r = 0; r < augmented_.pivot_cols.size(); ++r) {
    if (augmented_.pivot_cols[r] < m) continue;
    Vector z(k);
    for (std::size_t j = 0; j < k; ++j) z[j] = augmented_.rows.at(r, m + j);
    kernel_.push_back(std::move(z));
  }
}

std::optional<Vector> LinearSystem::try_solve(const Vector& b) const {
  try {
    return solve(b).particular;
  } catch (const NoSolution&) {
    return std::nullopt;
  }
}

SolveResult LinearSystem::solve(const Vector& b) const {
  const std::size_t m = a_.rows;
  const std::size_t k = a_.cols;
  if (b.size() != m) throw DimensionMismatch("right-hand side length does not match system");
  Vector v(m + k);
  std::copy(b.begin(), b.end(), v.begin());
  if (auto stuck = reduce_by(ring_, augmented_, v, m)) {
    throw NoSolution(static_cast<long>(*stuck), augmented_.pivot_cols[*stuck]);
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (!ring_.is_zero(v[i])) throw NoSolution(-1, i);
  }
  SolveResult result;
  result.particular.resize(k);
  for (std::size_t j = 0; j < k; ++j) result.particular[j] = ring_.neg(v[m + j]);
  result.kernel = kernel_;
  return result;
}

SolveResult howell_solve(const CoefficientRing& ring, const Matrix& a, const Vector& b) {
  return LinearSystem(ring, a).solve(b);
}

std::vector<std::size_t> quotient_invariants(const CoefficientRing& ring,
                                             const std::vector<Vector>& numerator,
                                             const std::vector<Vector>& denominator,
                                             std::size_t cols) {
  const std::size_t n = ring.length();
  const std::size_t base =
      howell_form(ring, LinearSystem::rows_to_matrix(denominator, cols)).log_size(ring);
  // sizes[j] = log_q |p^j N + D| - log_q |D| = log_q |p^j M|.
  std::vector<std::size_t> sizes(n + 1, 0);
  for (std::size_t j = 0; j <= n; ++j) {
    std::vector<Vector> gens = denominator;
    for (const auto& row : numerator) {
      Vector scaled(row.size());
      for (std::size_t c = 0; c < row.size(); ++c) scaled[c] = ring.mul_p_power(row[c], j);
      gens.push_back(std::move(scaled));
    }
    const std::size_t total =
        howell_form(ring, LinearSystem::rows_to_matrix(gens, cols)).log_size(ring);
    if (total < base) throw Error("internal: denominator not contained in numerator");
    sizes[j] = total - base;
  }
  // count_above[j] = number of invariant factors with exponent > j.
  std::vector<std::size_t> exponents;
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t above_j = sizes[j] - sizes[j + 1];
    const std::size_t above_next = j + 1 < n ? sizes[j + 1] - sizes[j + 2] : 0;
    for (std::size_t t = above_next; t < above_j; ++t) exponents.push_back(j + 1);
  }
  std::sort(exponents.rbegin(), exponents.rend());
  return exponents;
}

}  // namespace wittorders
