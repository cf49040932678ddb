#include "tfg/permutation.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "tfg/sequence_space.hpp"

namespace tfg {

Perm perm_identity(int d) {
  Perm p(d);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Perm perm_multiply(const Perm& p, const Perm& q) {
  if (p.size() != q.size()) throw Error("permutations of different degree");
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = p[q[i]];
  return r;
}

Perm perm_inverse(const Perm& p) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<int>(i);
  return r;
}

bool perm_valid(const Perm& p) {
  std::vector<bool> hit(p.size(), false);
  for (int x : p) {
    if (x < 0 || static_cast<std::size_t>(x) >= p.size() || hit[x]) return false;
    hit[x] = true;
  }
  return true;
}

std::vector<std::size_t> cycle_lengths(const Perm& p) {
  std::vector<bool> seen(p.size(), false);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    std::size_t n = 0;
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      ++n;
    }
    out.push_back(n);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool perm_even(const Perm& p) {
  std::size_t transpositions = 0;
  for (auto n : cycle_lengths(p)) transpositions += n - 1;
  return transpositions % 2 == 0;
}

Perm perm_cycle(int d, const std::vector<int>& points) {
  Perm p = perm_identity(d);
  for (std::size_t i = 0; i < points.size(); ++i) p[points[i]] = points[(i + 1) % points.size()];
  if (!perm_valid(p)) throw Error("cycle points must be distinct and in range");
  return p;
}

std::vector<Perm> symmetric_group(int d) {
  std::vector<Perm> out;
  Perm p = perm_identity(d);
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::vector<Perm> alternating_group(int d) {
  std::vector<Perm> out;
  for (auto& p : symmetric_group(d))
    if (perm_even(p)) out.push_back(std::move(p));
  return out;
}

std::size_t product_closure_order(int d, int factors, const std::vector<std::vector<Perm>>& generators) {
  if (d < 1 || d > 7) throw Error("closure supports degrees 1..7");
  const auto all = symmetric_group(d);
  const std::size_t n = all.size();
  std::map<Perm, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index[all[i]] = i;
  std::vector<std::uint32_t> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) table[i * n + j] = static_cast<std::uint32_t>(index[perm_multiply(all[i], all[j])]);

  std::size_t total = 1;
  for (int f = 0; f < factors; ++f) total *= n;
  std::vector<std::vector<std::size_t>> gens;
  for (const auto& g : generators) {
    if (static_cast<int>(g.size()) != factors) throw Error("generator tuple has the wrong length");
    std::vector<std::size_t> idx;
    for (const auto& p : g) {
      if (static_cast<int>(p.size()) != d || !perm_valid(p)) throw Error("generator is not a permutation of degree d");
      idx.push_back(index[p]);
    }
    gens.push_back(std::move(idx));
  }

  auto encode = [&](const std::vector<std::size_t>& t) {
    std::size_t code = 0;
    for (auto x : t) code = code * n + x;
    return code;
  };
  std::vector<bool> seen(total, false);
  std::vector<std::vector<std::size_t>> frontier{std::vector<std::size_t>(factors, index[perm_identity(d)])};
  seen[encode(frontier[0])] = true;
  std::size_t count = 1;
  while (!frontier.empty()) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& t : frontier)
      for (const auto& g : gens) {
        std::vector<std::size_t> r(factors);
        for (int f = 0; f < factors; ++f) r[f] = table[g[f] * n + t[f]];
        auto c = encode(r);
        if (!seen[c]) {
          seen[c] = true;
          ++count;
          next.push_back(std::move(r));
        }
      }
    frontier = std::move(next);
  }
  return count;
}

}  // namespace tfg
