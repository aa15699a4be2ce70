#include "wittorders/group.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "wittorders/errors.hpp"

namespace wittorders {

GroupTable::GroupTable(std::vector<std::vector<std::size_t>> mult) : mult_(std::move(mult)) {
  const std::size_t n = mult_.size();
  if (n == 0) throw InvalidInput("group table is empty");
  for (const auto& row : mult_) {
    if (row.size() != n) throw InvalidInput("group table is not square");
    for (const std::size_t x : row) {
      if (x >= n) throw InvalidInput("group table entry out of range");
    }
  }
  bool found = false;
  for (std::size_t e = 0; e < n && !found; ++e) {
    bool ok = true;
    for (std::size_t g = 0; g < n && ok; ++g) ok = mult_[e][g] == g && mult_[g][e] == g;
    if (ok) {
      identity_ = e;
      found = true;
    }
  }
  if (!found) throw InvalidInput("group table has no identity element");
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (mult_[mult_[a][b]][c] != mult_[a][mult_[b][c]]) {
          throw InvalidInput("group table is not associative at (" + std::to_string(a) + ", " +
                             std::to_string(b) + ", " + std::to_string(c) + ")");
        }
      }
    }
  }
  inverse_.assign(n, n);
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t h = 0; h < n; ++h) {
      if (mult_[g][h] == identity_ && mult_[h][g] == identity_) inverse_[g] = h;
    }
    if (inverse_[g] == n) throw InvalidInput("element " + std::to_string(g) + " has no inverse");
  }
}

bool GroupTable::is_subgroup(const std::vector<std::size_t>& elements) const {
  if (elements.empty()) return false;
  const std::set<std::size_t> members(elements.begin(), elements.end());
  if (members.size() != elements.size()) return false;
  for (const std::size_t x : elements) {
    if (x >= order()) return false;
  }
  if (!members.count(identity_)) return false;
  for (const std::size_t a : elements) {
    if (!members.count(inverse_[a])) return false;
    for (const std::size_t b : elements) {
      if (!members.count(mult_[a][b])) return false;
    }
  }
  return true;
}

bool GroupTable::is_normal_subgroup(const std::vector<std::size_t>& elements) const {
  if (!is_subgroup(elements)) return false;
  const std::set<std::size_t> members(elements.begin(), elements.end());
  for (std::size_t g = 0; g < order(); ++g) {
    for (const std::size_t n : elements) {
      if (!members.count(mult_[mult_[g][n]][inverse_[g]])) return false;
    }
  }
  return true;
}

bool GroupTable::is_abelian() const {
  for (std::size_t a = 0; a < order(); ++a) {
    for (std::size_t b = 0; b < order(); ++b) {
      if (mult_[a][b] != mult_[b][a]) return false;
    }
  }
  return true;
}

GroupTable cyclic_group(std::size_t n) {
  std::vector<std::vector<std::size_t>> mult(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) mult[a][b] = (a + b) % n;
  }
  return GroupTable(std::move(mult));
}

GroupTable direct_product(const GroupTable& a, const GroupTable& b) {
  const std::size_t na = a.order();
  const std::size_t nb = b.order();
  std::vector<std::vector<std::size_t>> mult(na * nb, std::vector<std::size_t>(na * nb));
  for (std::size_t x = 0; x < na * nb; ++x) {
    for (std::size_t y = 0; y < na * nb; ++y) {
      mult[x][y] = a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb);
    }
  }
  return GroupTable(std::move(mult));
}

GroupTable symmetric_group_3() {
  std::vector<std::vector<int>> perms = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                         {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  std::map<std::vector<int>, std::size_t> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = i;
  std::vector<std::vector<std::size_t>> mult(6, std::vector<std::size_t>(6));
  for (std::size_t a = 0; a < 6; ++a) {
    for (std::size_t b = 0; b < 6; ++b) {
      // (a*b)(i) = a(b(i))
      std::vector<int> c(3);
      for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
      mult[a][b] = index.at(c);
    }
  }
  return GroupTable(std::move(mult));
}

Quotient quotient_group(const GroupTable& g, const std::vector<std::size_t>& normal) {
  if (!g.is_normal_subgroup(normal)) throw NotNormal("subgroup is not normal");
  const std::size_t n = g.order();
  std::vector<std::size_t> coset_of(n, n);
  std::vector<std::size_t> reps;
  // The identity represents its own coset so that [1] = 1.
  std::vector<std::size_t> order{g.identity()};
  for (std::size_t x = 0; x < n; ++x) {
    if (x != g.identity()) order.push_back(x);
  }
  for (const std::size_t x : order) {
    if (coset_of[x] != n) continue;
    const std::size_t id = reps.size();
    reps.push_back(x);
    for (const std::size_t m : normal) coset_of[g.mul(x, m)] = id;
  }
  const std::size_t k = reps.size();
  std::vector<std::vector<std::size_t>> mult(k, std::vector<std::size_t>(k));
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) mult[a][b] = coset_of[g.mul(reps[a], reps[b])];
  }
  return Quotient{GroupTable(std::move(mult)), reps, coset_of};
}

std::size_t p_valuation(std::size_t value, std::size_t p) {
  if (value == 0 || p < 2) return 0;
  std::size_t v = 0;
  while (value % p == 0) {
    value /= p;
    ++v;
  }
  return v;
}

}  // namespace wittorders
