#pragma once

#include <cstddef>
#include <vector>

namespace wittorders {

// A finite group given by its multiplication table on indices 0..order-1.
class GroupTable {
 public:
  // Validates associativity, a two-sided identity and inverses; throws
  // InvalidInput otherwise.
  explicit GroupTable(std::vector<std::vector<std::size_t>> mult);
  // The trivial group.
  GroupTable() : mult_{{0}}, inverse_{0} {}

  std::size_t order() const { return mult_.size(); }
  std::size_t identity() const { return identity_; }
  std::size_t mul(std::size_t g, std::size_t h) const { return mult_[g][h]; }
  std::size_t inverse(std::size_t g) const { return inverse_[g]; }
  const std::vector<std::vector<std::size_t>>& table() const { return mult_; }

  bool is_subgroup(const std::vector<std::size_t>& elements) const;
  bool is_normal_subgroup(const std::vector<std::size_t>& elements) const;
  bool is_abelian() const;

  bool operator==(const GroupTable& other) const { return mult_ == other.mult_; }

 private:
  std::vector<std::vector<std::size_t>> mult_;
  std::vector<std::size_t> inverse_;
  std::size_t identity_ = 0;
};

GroupTable cyclic_group(std::size_t n);
GroupTable direct_product(const GroupTable& a, const GroupTable& b);
// S_3 with elements listed as permutations of {0,1,2} in lexicographic order:
// 0 = id, 1 = (1 2), 2 = (0 1), 3 = (0 1 2), 4 = (0 2 1), 5 = (0 2).
GroupTable symmetric_group_3();

// Quotient G/N with a chosen transversal.
struct Quotient {
  GroupTable group;
  // representative[x] = identity for the trivial coset, else the smallest
  // element index of the coset x.
  std::vector<std::size_t> representative;
  // coset_of[g] = quotient index of gN.
  std::vector<std::size_t> coset_of;
};

// Throws NotNormal if `normal` is not a normal subgroup.
Quotient quotient_group(const GroupTable& g, const std::vector<std::size_t>& normal);

// p-adic valuation of the group order.
std::size_t p_valuation(std::size_t value, std::size_t p);

}  // namespace wittorders
