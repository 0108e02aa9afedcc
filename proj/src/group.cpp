#include "hopfsmash/group.hpp"

#include <array>
#include <numeric>
#include <stdexcept>
#include <string>

namespace hopfsmash {

GroupTable::GroupTable(std::vector<std::vector<size_t>> table, size_t identity)
    : t_(std::move(table)), e_(identity) {
  const size_t n = t_.size();
  if (n == 0) throw std::invalid_argument("group table is empty");
  if (e_ >= n) throw std::invalid_argument("identity index out of range");
  for (const auto& row : t_) {
    if (row.size() != n) throw std::invalid_argument("group table is not square");
    for (size_t v : row)
      if (v >= n) throw std::invalid_argument("group table entry out of range");
  }
  for (size_t a = 0; a < n; ++a)
    if (t_[e_][a] != a || t_[a][e_] != a)
      throw std::invalid_argument("identity law fails at element " + std::to_string(a));
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b)
      for (size_t c = 0; c < n; ++c)
        if (t_[t_[a][b]][c] != t_[a][t_[b][c]])
          throw std::invalid_argument("associativity fails at (" + std::to_string(a) + "," +
                                      std::to_string(b) + "," + std::to_string(c) + ")");
  inv_.assign(n, n);
  for (size_t a = 0; a < n; ++a) {
    for (size_t b = 0; b < n; ++b)
      if (t_[a][b] == e_ && t_[b][a] == e_) {
        inv_[a] = b;
        break;
      }
    if (inv_[a] == n)
      throw std::invalid_argument("no inverse for element " + std::to_string(a));
  }
}

size_t GroupTable::power(size_t a, long e) const {
  if (e < 0) {
    a = inv_[a];
    e = -e;
  }
  size_t acc = e_;
  for (long i = 0; i < e; ++i) acc = t_[acc][a];
  return acc;
}

size_t GroupTable::element_order(size_t a) const {
  size_t acc = a, k = 1;
  while (acc != e_) {
    acc = t_[acc][a];
    ++k;
  }
  return k;
}

size_t GroupTable::exponent() const {
  size_t l = 1;
  for (size_t a = 0; a < order(); ++a) l = std::lcm(l, element_order(a));
  return l;
}

GroupTable cyclic_group(size_t n) {
  std::vector<std::vector<size_t>> t(n, std::vector<size_t>(n));
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return GroupTable(std::move(t), 0);
}

GroupTable symmetric_group_3() {
  // One-line notation, lexicographic.
  const std::array<std::array<size_t, 3>, 6> perms = {{
      {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
  auto index_of = [&](const std::array<size_t, 3>& p) -> size_t {
    for (size_t i = 0; i < 6; ++i)
      if (perms[i] == p) return i;
    throw std::logic_error("not a permutation");
  };
  std::vector<std::vector<size_t>> t(6, std::vector<size_t>(6));
  for (size_t a = 0; a < 6; ++a)
    for (size_t b = 0; b < 6; ++b) {
      std::array<size_t, 3> comp;
      for (size_t i = 0; i < 3; ++i) comp[i] = perms[a][perms[b][i]];
      t[a][b] = index_of(comp);
    }
  return GroupTable(std::move(t), 0);
}

}  // namespace hopfsmash
