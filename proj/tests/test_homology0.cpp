#include <gtest/gtest.h>

#include "random_objects.hpp"

using namespace tfg;
using namespace tfg::testing;

namespace {

Presentation shift(int k) { return load_presentation(data_dir() + "/full_shift_" + std::to_string(k) + ".json"); }

}  // namespace

TEST(H0, EliminationBasics) {
  const auto s = SequenceSpace::full_shift({"0", "1"});
  H0Approximation h(s, 2);
  EXPECT_EQ(h.cells().size(), 4u);
  EXPECT_EQ(h.dimension(), 4u);
  EXPECT_TRUE(h.add_relation(make_clopen(s, {"00"}), make_clopen(s, {"01"})));
  EXPECT_FALSE(h.add_relation(make_clopen(s, {"01"}), make_clopen(s, {"00"})));
  EXPECT_EQ(h.dimension(), 3u);
  EXPECT_TRUE(h.is_zero(make_clopen(s, {"0"})));
  EXPECT_TRUE(h.same_class(make_clopen(s, {"00"}), make_clopen(s, {"01"})));
  EXPECT_EQ(h.describe(), "(Z/2)^3");
}

// For the k-letter shift every cylinder is equivalent to the whole space and
// (k-1)·[X] = 0, so H0(Z/2) is Z/2 for odd k and trivial for even k, and the
// class of a set is the parity of its number of depth-d cells.
TEST(H0, ParityAgainstCellCount) {
  Rng rng(41);
  for (int k = 2; k <= 5; ++k) {
    const auto p = shift(k);
    for (std::size_t d = 1; d <= 3; ++d) {
      const auto h = h0_z2(p.groupoid, p.basic, d, 3);
      EXPECT_EQ(h.dimension(), k % 2 ? 1u : 0u) << k << " " << d;
      EXPECT_EQ(h.describe(), k % 2 ? "Z/2" : "trivial");
      for (int i = 0; i < 20; ++i) {
        const auto u = random_clopen(p.groupoid->space(), rng, d);
        const bool odd = u.cylinders_at_depth(d).size() % 2 == 1;
        EXPECT_EQ(h.is_zero(u), k % 2 == 0 || !odd);
      }
    }
  }
}

TEST(H0, WorkedExampleGenerator) {
  const auto p = load_presentation(data_dir() + "/worked_example.json");
  const auto h = h0_z2(p.groupoid, p.basic, 2, 3);
  EXPECT_EQ(h.describe(), "Z/2");
  EXPECT_FALSE(h.is_zero(make_clopen(p.groupoid->space(), {"11"})));
}

TEST(H0, QuotientRepresentative) {
  const auto p = shift(3);
  const auto& s = p.groupoid->space();
  for (const auto* w : {"0", "12", "201"}) {
    const auto u = make_clopen(s, {w});
    const auto f = quotient_bisection(p.groupoid, p.basic, u, 4);
    ASSERT_TRUE(f.has_value());
    EXPECT_EQ(f->source(), u);
    EXPECT_TRUE(f->range().is_disjoint(u));
    const auto t = to_quotient_rep(p.groupoid, p.basic, u);
    EXPECT_TRUE(multiply(t, t).is_identity());
    EXPECT_EQ(support(t), u.united(f->range()));
  }
  EXPECT_THROW(to_quotient_rep(p.groupoid, p.basic, ClopenSet::whole(s)), Error);
}
