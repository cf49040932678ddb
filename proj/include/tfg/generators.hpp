#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tfg/multisection.hpp"

namespace tfg {

struct NamedBisection {
  std::string name;
  Bisection bisection;
};

/// Partition of the unit space into clopen parts with lookup by cylinder.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<ClopenSet> parts);
  /// The cylinders of all words of the given length.
  static Partition cylinders(const SpacePtr& space, std::size_t depth);

  const std::vector<ClopenSet>& parts() const { return parts_; }
  std::size_t size() const { return parts_.size(); }
  /// Index of the part containing the cylinder of w, or -1 if it meets several.
  int part_of(const Word& w) const;

 private:
  std::vector<ClopenSet> parts_;
};

struct OrbitCheck {
  bool verified = false;
  /// Sub-cylinders for which five parts could not be reached within the bounds.
  std::vector<Word> undetermined;
};

struct PartitionChoice {
  Partition partition;
  OrbitCheck orbits;
};

struct SearchBounds {
  std::size_t extra_depth = 3;     // refinement of orbit samples below the part depth
  std::size_t product_length = 6;  // word length of products explored per sample
  std::size_t max_images = 4000;   // images explored per sample
};

/// Depth-d cylinder partition with the orbit condition (every orbit meets at
/// least five parts) checked by product reachability from sub-cylinders.
PartitionChoice choose_partition(const GroupoidPtr& groupoid, const std::vector<NamedBisection>& basic,
                                 std::size_t depth, const SearchBounds& bounds = {});

struct Cover {
  /// Symmetric cover; every element has source and range in different parts.
  std::vector<NamedBisection> elements;
  /// Names of the cylinder exchanges added so that every point has at least
  /// four cover arrows into pairwise different parts.
  std::vector<std::string> augmentation;
};

/// Splits basic bisections and their inverses along the partition, replaces
/// pieces inside a single part F by U and UF for a cylinder exchange U, and
/// adds cylinder exchanges. Throws Error if a part has no tail-compatible
/// partner.
Cover build_cover(const GroupoidPtr& groupoid, const std::vector<NamedBisection>& basic, const Partition& partition);

/// Products of at most three cover elements, cut into part pairs with
/// different source and range parts; deduplicated.
std::vector<Bisection> build_T(const std::vector<NamedBisection>& cover, const Partition& partition);

struct MConstruction {
  std::vector<Multisection> multisections;
  /// Arrows of T not contained in any entry F_ij (i != j) of the multisections.
  std::vector<std::string> missing;
};

/// Degree-5 multisections with components in pairwise different parts whose
/// off-diagonal entries cover every element of T.
MConstruction build_M(const std::vector<Bisection>& t, const Partition& partition);

/// Arrows of T not covered by the off-diagonal entries of M.
std::vector<std::string> uncovered(const std::vector<Bisection>& t, const std::vector<Multisection>& m);

struct GeneratingSetReport {
  PartitionChoice partition;
  Cover cover;
  std::vector<Bisection> t;
  MConstruction m;
  std::vector<FullGroupElement> generators;
};

GeneratingSetReport generating_set(const GroupoidPtr& groupoid, const std::vector<NamedBisection>& basic,
                                   std::size_t depth, const SearchBounds& bounds = {});

/// Generator index and exponent (+1 or -1); the word g1 g2 ... multiplies left
/// to right, so the last letter acts first.
using GeneratorWord = std::vector<std::pair<std::size_t, int>>;

struct MembershipResult {
  bool found = false;
  GeneratorWord word;
  std::size_t explored = 0;
  std::size_t reached_length = 0;
};

/// Breadth-first search over words in gens ∪ gens⁻¹. found == false means
/// inconclusive, never "not a member".
MembershipResult bounded_membership(const FullGroupElement& g, const std::vector<FullGroupElement>& gens,
                                    std::size_t max_len, std::size_t max_states);

/// Word k with k⁻¹ g k = h, searched breadth-first like bounded_membership.
MembershipResult conjugator_search(const FullGroupElement& g, const FullGroupElement& h,
                                   const std::vector<FullGroupElement>& gens, std::size_t max_len,
                                   std::size_t max_states);

/// Product of a generator word.
FullGroupElement evaluate_word(const GeneratorWord& word, const std::vector<FullGroupElement>& gens,
                               const GroupoidPtr& groupoid);

/// Permutation induced on the cells of a cylinder partition, if g maps every
/// cell onto a cell.
std::optional<Perm> induced_permutation(const FullGroupElement& g, std::size_t depth);

}  // namespace tfg
