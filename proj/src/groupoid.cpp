#include "tfg/groupoid.hpp"

namespace tfg {

namespace {

// prefix generators T_(level,letter) and state generators live in disjoint ranges
constexpr std::int64_t kStateCode = std::int64_t{1} << 40;

std::int64_t prefix_code(std::size_t level, Letter x) {
  return 1 + static_cast<std::int64_t>(level) * 0x10000 + x;
}

}  // namespace

Tag tag_concat(const Tag& a, const Tag& b) {
  Tag out = a;
  for (auto c : b) {
    if (!out.empty() && out.back() == -c)
      out.pop_back();
    else
      out.push_back(c);
  }
  return out;
}

Tag tag_inverse(const Tag& t) {
  Tag out;
  for (auto it = t.rbegin(); it != t.rend(); ++it) out.push_back(-*it);
  return out;
}

Tag literal_tag(const Word& dom, StateId q, const Word& ran) {
  Tag t;
  for (std::size_t i = 0; i < ran.size(); ++i) t = tag_concat(t, {prefix_code(i, ran[i])});
  if (q != kIdentity) t = tag_concat(t, {kStateCode + q});
  for (std::size_t i = dom.size(); i-- > 0;) t = tag_concat(t, {-prefix_code(i, dom[i])});
  return t;
}

Groupoid::Groupoid(SpacePtr space, GermSemantics semantics, std::size_t state_bound)
    : space_(std::move(space)), semantics_(semantics) {
  const std::size_t k = space_->kind() == SequenceSpace::Kind::full_shift ? space_->alphabet_size(0) : 0;
  germs_ = std::make_shared<GermAlgebra>(k, state_bound);
}

}  // namespace tfg
