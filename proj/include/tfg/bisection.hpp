#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tfg/clopen.hpp"
#include "tfg/groupoid.hpp"

namespace tfg {

/// Prefix exchange v·w -> u·q(w).
struct Arrow {
  Word dom;
  StateId germ = kIdentity;
  Word ran;
  Tag tag;

  friend bool operator==(const Arrow&, const Arrow&) = default;
};

/// Compact open bisection as a finite germ-labelled prefix-exchange table.
///
/// Stored canonically: sibling families that are the split of a single arrow
/// labelled by a declared (base) state are merged, and arrows are sorted by
/// domain word. Values are immutable.
class Bisection {
 public:
  Bisection() = default;
  /// Validates and canonicalizes; throws Error if the arrows do not form a bisection.
  Bisection(GroupoidPtr groupoid, std::vector<Arrow> arrows);

  static Bisection empty(GroupoidPtr groupoid);
  static Bisection identity(GroupoidPtr groupoid, const ClopenSet& set);
  /// Table literal: parallel lists of domain words, germ names and range words.
  static Bisection literal(GroupoidPtr groupoid, const std::vector<std::string>& dom,
                           const std::vector<std::string>& germ, const std::vector<std::string>& ran);

  const GroupoidPtr& groupoid() const { return groupoid_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  bool is_empty() const { return arrows_.empty(); }

  ClopenSet source() const;
  ClopenSet range() const;

  /// Germ-level restriction of the arrow covering the cylinder w.
  struct Local {
    Word ran;
    StateId germ;
    Tag tag;
  };
  enum class Coverage { inside, outside, partial };
  Coverage coverage(const Word& w) const;
  /// Defined only when coverage(w) == inside.
  std::optional<Local> at(const Word& w) const;

  Bisection inverse() const;
  /// The sub-bisection with source source() ∩ set.
  Bisection restrict(const ClopenSet& set) const;
  /// Germ-set operations. Throw Error when the result is not compact open,
  /// which can only happen for non-Hausdorff germ data.
  Bisection intersected(const Bisection& other) const;
  Bisection minus(const Bisection& other) const;
  /// Union of germ sets; throws Error if the union is not a bisection.
  Bisection united(const Bisection& other) const;

  bool equals(const Bisection& other) const;
  /// Every germ is a unit.
  bool is_identity() const;

  /// Normal-form key: equal keys iff equals().
  std::string key() const;
  /// Table text "(dom ... | germ ... | ran ...)".
  std::string to_string() const;

 private:
  void check_same(const Bisection& other) const;

  GroupoidPtr groupoid_;
  std::vector<Arrow> arrows_;
};

/// b1 ∘ b2: apply b2 first.
Bisection compose(const Bisection& b1, const Bisection& b2);

}  // namespace tfg
