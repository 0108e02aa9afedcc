#pragma once

#include <cstddef>
#include <vector>

namespace hopfsmash {

/// A finite group given by its full multiplication table.  Elements are the
/// indices 0..order-1.  The constructor checks closure, associativity,
/// identity and inverses exhaustively and throws std::invalid_argument on
/// any violation, so a constructed table is always a group.
class GroupTable {
public:
  GroupTable(std::vector<std::vector<size_t>> table, size_t identity);

  size_t order() const { return t_.size(); }
  size_t identity() const { return e_; }
  size_t mul(size_t a, size_t b) const { return t_[a][b]; }
  size_t inv(size_t a) const { return inv_[a]; }

  /// a^e for any integer e (negative exponents go through the inverse).
  size_t power(size_t a, long e) const;
  size_t element_order(size_t a) const;
  /// lcm of all element orders.
  size_t exponent() const;

private:
  std::vector<std::vector<size_t>> t_;
  size_t e_;
  std::vector<size_t> inv_;
};

/// Z/n with elements 0..n-1 under addition.
GroupTable cyclic_group(size_t n);

/// The symmetric group on {0,1,2}; elements are the six permutations in
/// lexicographic one-line order, composed as (pq)(i) = p(q(i)).
GroupTable symmetric_group_3();

}  // namespace hopfsmash
