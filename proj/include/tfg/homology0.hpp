#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tfg/generators.hpp"

namespace tfg {

/// Bit vector over the depth-d cells.
using CellVector = std::vector<std::uint64_t>;

/// Approximation of H0(G; Z/2) at cylinder depth d: classes of depth-d cells
/// modulo the relations 1_V = 1_F(V) for every product F of at most k basic
/// bisections (and inverses) and every cylinder V of depth <= d inside one
/// arrow of F whose image is a cylinder of depth <= d.
class H0Approximation {
 public:
  H0Approximation() = default;
  H0Approximation(SpacePtr space, std::size_t depth);

  std::size_t depth() const { return depth_; }
  const std::vector<Word>& cells() const { return cells_; }
  std::size_t relations() const { return relations_; }
  std::size_t rank() const { return pivots_.size(); }
  /// Dimension over Z/2 of the quotient.
  std::size_t dimension() const { return cells_.size() - rank(); }
  /// "trivial" or "(Z/2)^r".
  std::string describe() const;

  /// Adds the relation 1_a + 1_b = 0; returns true if it increased the rank.
  bool add_relation(const ClopenSet& a, const ClopenSet& b);

  /// Indicator of a clopen set (of depth <= d) reduced modulo the relations.
  CellVector class_of(const ClopenSet& set) const;
  bool same_class(const ClopenSet& a, const ClopenSet& b) const { return class_of(a) == class_of(b); }
  bool is_zero(const ClopenSet& set) const;

 private:
  CellVector indicator(const ClopenSet& set) const;
  CellVector reduce(CellVector v) const;

  SpacePtr space_;
  std::size_t depth_ = 0;
  std::vector<Word> cells_;
  std::size_t relations_ = 0;
  // pivot column -> row with that leading bit, rows fully reduced against each other
  std::vector<std::pair<std::size_t, CellVector>> pivots_;
};

H0Approximation h0_z2(const GroupoidPtr& groupoid, const std::vector<NamedBisection>& basic, std::size_t depth,
                      std::size_t product_bound);

/// Bisection F with source U and range disjoint from U, found among restrictions
/// of products of at most max_length basic bisections (and inverses); the
/// preferred choice keeps word lengths and then has the smallest range.
std::optional<Bisection> quotient_bisection(const GroupoidPtr& groupoid, const std::vector<NamedBisection>& basic,
                                            const ClopenSet& u, std::size_t max_length);

/// τ_F for the bisection found by quotient_bisection; this represents the
/// class of 1_U under H0(G; Z/2) -> S/A. Throws Error if no F is found.
FullGroupElement to_quotient_rep(const GroupoidPtr& groupoid, const std::vector<NamedBisection>& basic,
                                 const ClopenSet& u, std::size_t max_length = 4);

}  // namespace tfg
