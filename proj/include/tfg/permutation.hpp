#pragma once

#include <cstddef>
#include <vector>

namespace tfg {

/// Permutation of {0, ..., d-1} as an image table.
using Perm = std::vector<int>;

Perm perm_identity(int d);
/// (p·q)(i) = p(q(i)).
Perm perm_multiply(const Perm& p, const Perm& q);
Perm perm_inverse(const Perm& p);
bool perm_even(const Perm& p);
bool perm_valid(const Perm& p);
/// Cyclic permutation p0 -> p1 -> ... -> p0 on d points.
Perm perm_cycle(int d, const std::vector<int>& points);
/// Lengths of the cycles, including fixed points, sorted.
std::vector<std::size_t> cycle_lengths(const Perm& p);

std::vector<Perm> symmetric_group(int d);
std::vector<Perm> alternating_group(int d);

/// Order of the subgroup of (S_d)^factors generated by the given tuples,
/// computed by breadth-first closure. Requires d <= 7.
std::size_t product_closure_order(int d, int factors, const std::vector<std::vector<Perm>>& generators);

}  // namespace tfg
