#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tfg/full_group.hpp"
#include "tfg/permutation.hpp"

namespace tfg {

/// d×d grid of bisections; entry (i, j) maps component i onto component j.
class Multisection {
 public:
  Multisection() = default;
  /// Stores the grid; call validate() to check the axioms.
  Multisection(GroupoidPtr groupoid, std::vector<std::vector<Bisection>> grid);

  int degree() const { return static_cast<int>(grid_.size()); }
  const Bisection& at(int i, int j) const { return grid_.at(i).at(j); }
  const GroupoidPtr& groupoid() const { return groupoid_; }
  ClopenSet component(int i) const { return grid_.at(i).at(i).source(); }
  ClopenSet domain() const;
  bool is_empty() const;

  /// Axiom violations, or nullopt if the grid is a multisection.
  std::optional<std::string> validate() const;

 private:
  GroupoidPtr groupoid_;
  std::vector<std::vector<Bisection>> grid_;
};

/// F_ij = (H_j W)(H_i W)⁻¹. Throws Error naming the failed precondition.
Multisection from_spokes(const std::vector<Bisection>& spokes, const ClopenSet& base);

/// Element mapping component i to component π(i) and fixing the rest.
FullGroupElement embed(const Multisection& m, const Perm& pi);

/// Images of the 3-cycles (0 1 k), k = 2..d-1.
std::vector<FullGroupElement> alternating_generators(const Multisection& m);

/// Restriction to U ⊆ component i.
Multisection restrict(const Multisection& m, const ClopenSet& set, int i);

/// Pieces of the decomposition of M along two covering multisections.
struct CoverSplit {
  Multisection common;  // entries F1 ∩ F2
  Multisection first;   // F1 \ F2
  Multisection second;  // F2 \ F1
};
/// Requires F_ij = F1_ij ∪ F2_ij for all entries; each piece is validated.
CoverSplit split_by_cover(const Multisection& m, const Multisection& f1, const Multisection& f2);

/// Multisection of degree d1 + d2 - 1 on the union of the restrictions of g
/// and h to U = G_00 ∩ H_00. Index 0 is the shared component, then g's other
/// components, then h's.
Multisection glue(const Multisection& g, const Multisection& h);

}  // namespace tfg
