#pragma once

#include <memory>
#include <string>
#include <vector>

#include "tfg/germ.hpp"
#include "tfg/sequence_space.hpp"

namespace tfg {

/// How arrow labels are compared: as germs of local homeomorphisms (state
/// equality in the minimal germ algebra) or as formal group elements of an
/// action groupoid (reduced words in prefix and state generators).
enum class GermSemantics { germs, action };

/// Reduced formal word. Positive codes are generators, negative codes their
/// inverses. Only consulted under action semantics.
using Tag = std::vector<std::int64_t>;

Tag tag_concat(const Tag& a, const Tag& b);
Tag tag_inverse(const Tag& t);
/// Formal word T_u q T_v^-1 of a literal arrow (v, q, u).
Tag literal_tag(const Word& dom, StateId q, const Word& ran);

/// Unit space, germ algebra and comparison mode shared by every bisection of
/// one presentation.
class Groupoid {
 public:
  Groupoid(SpacePtr space, GermSemantics semantics = GermSemantics::germs, std::size_t state_bound = 64);

  const SpacePtr& space() const { return space_; }
  GermAlgebra& germs() const { return *germs_; }
  GermSemantics semantics() const { return semantics_; }
  bool action() const { return semantics_ == GermSemantics::action; }

 private:
  SpacePtr space_;
  std::shared_ptr<GermAlgebra> germs_;
  GermSemantics semantics_;
};

using GroupoidPtr = std::shared_ptr<const Groupoid>;

inline GroupoidPtr make_groupoid(SpacePtr space, GermSemantics semantics = GermSemantics::germs,
                                 std::size_t state_bound = 64) {
  return std::make_shared<const Groupoid>(std::move(space), semantics, state_bound);
}

}  // namespace tfg
