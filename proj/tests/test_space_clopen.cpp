#include <gtest/gtest.h>

#include "random_objects.hpp"

using namespace tfg;
using namespace tfg::testing;

namespace {

SpacePtr golden() { return SequenceSpace::sft({"0", "1"}, {{"0", "0"}, {"0", "1"}, {"1", "0"}}); }

// Words of length n with no factor 11, by direct enumeration of all binary strings.
std::size_t golden_count(std::size_t n) {
  std::size_t c = 0;
  for (std::size_t m = 0; m < (1u << n); ++m)
    if ((m & (m >> 1)) == 0) ++c;
  return c;
}

}  // namespace

TEST(SequenceSpace, FullShiftWordCounts) {
  const auto s = SequenceSpace::full_shift({"a", "b", "c"});
  for (std::size_t n = 0; n <= 5; ++n) {
    std::size_t expect = 1;
    for (std::size_t i = 0; i < n; ++i) expect *= 3;
    EXPECT_EQ(s->words_of_length(n).size(), expect);
  }
}

TEST(SequenceSpace, GoldenMeanCountsMatchEnumeration) {
  const auto s = golden();
  for (std::size_t n = 1; n <= 12; ++n) EXPECT_EQ(s->words_of_length(n).size(), golden_count(n)) << n;
  EXPECT_THROW(s->parse("011"), Error);
  EXPECT_TRUE(s->valid(s->parse("0101")));
}

TEST(SequenceSpace, SftTailCompatibility) {
  const auto s = golden();
  // after a 1 only 0 may follow; after a 0 anything may
  EXPECT_TRUE(s->tail_compatible(s->parse("0"), s->parse("10")));
  EXPECT_FALSE(s->tail_compatible(s->parse("0"), s->parse("1")));
  EXPECT_TRUE(s->tail_compatible(s->parse("1"), s->parse("01")));
}

TEST(SequenceSpace, FormatParseRoundTrip) {
  const auto s = SequenceSpace::full_shift({"x", "y"});
  EXPECT_EQ(s->format(s->parse("xyyx")), "xyyx");
  const auto t = SequenceSpace::full_shift({"ab", "c"});
  EXPECT_EQ(t->format(t->parse("ab.c.ab")), "ab.c.ab");
  EXPECT_THROW(s->parse("xz"), Error);
}

TEST(SequenceSpace, BratteliLevels) {
  const auto s = SequenceSpace::bratteli(
      {{"v"}, {"x", "y"}, {"x", "y"}},
      {{{"a", 0, 0}, {"b", 0, 0}, {"c", 0, 1}}, {{"d", 0, 0}, {"e", 1, 0}, {"f", 0, 1}, {"g", 1, 1}}});
  EXPECT_EQ(s->words_of_length(1).size(), 3u);
  // paths of length 2: a,b end at x (2 ways each), c ends at y (2 ways)
  EXPECT_EQ(s->words_of_length(2).size(), 6u);
  EXPECT_TRUE(s->tail_compatible(s->parse("a"), s->parse("b")));
  EXPECT_FALSE(s->tail_compatible(s->parse("a"), s->parse("c")));
  EXPECT_TRUE(s->tail_compatible(s->parse("ad"), s->parse("ce")));
  EXPECT_FALSE(s->stationary());
}

TEST(SequenceSpace, RejectsDeadEnds) {
  EXPECT_THROW(SequenceSpace::sft({"0", "1"}, {{"0", "0"}}), Error);
}

TEST(Clopen, CanonicalForm) {
  const auto s = SequenceSpace::full_shift({"0", "1"});
  EXPECT_TRUE(make_clopen(s, {"0", "1"}).is_whole());
  EXPECT_EQ(make_clopen(s, {"00", "01", "1"}), ClopenSet::whole(s));
  EXPECT_EQ(make_clopen(s, {"0", "01", "011"}).words().size(), 1u);
  EXPECT_EQ(make_clopen(s, {"10", "00"}).to_string(), make_clopen(s, {"00", "10"}).to_string());
  EXPECT_EQ(make_clopen(s, {"1"}).complemented(), make_clopen(s, {"0"}));
}

TEST(Clopen, GoldenMeanSiblingsMerge) {
  const auto s = golden();
  // the only extension of 1 is 10
  EXPECT_EQ(make_clopen(s, {"10"}), make_clopen(s, {"1"}));
  EXPECT_EQ(make_clopen(s, {"00", "01"}), make_clopen(s, {"0"}));
}

TEST(Clopen, CylindersAtDepthMatchCount) {
  Rng rng(7);
  const auto s = SequenceSpace::full_shift({"0", "1", "2"});
  for (int i = 0; i < 200; ++i) {
    const auto a = random_clopen(s, rng);
    const auto cells = a.cylinders_at_depth(4);
    std::size_t brute = 0;
    for (const auto& w : s->words_of_length(4)) brute += a.contains_cylinder(w);
    EXPECT_EQ(cells.size(), brute);
  }
}

TEST(Clopen, RefineIsPartition) {
  Rng rng(11);
  const auto s = SequenceSpace::full_shift({"0", "1"});
  for (int i = 0; i < 100; ++i) {
    std::vector<ClopenSet> sets{random_clopen(s, rng), random_clopen(s, rng), random_clopen(s, rng)};
    const auto cells = refine(s, sets);
    ClopenSet u = ClopenSet::empty(s);
    for (std::size_t a = 0; a < cells.size(); ++a) {
      EXPECT_FALSE(cells[a].is_empty());
      for (std::size_t b = a + 1; b < cells.size(); ++b) EXPECT_TRUE(cells[a].is_disjoint(cells[b]));
      for (const auto& x : sets) EXPECT_TRUE(cells[a].is_subset(x) || cells[a].is_disjoint(x));
      u = u.united(cells[a]);
    }
    EXPECT_TRUE(u.is_whole());
  }
}

TEST(Clopen, MixedSpacesRejected) {
  const auto a = ClopenSet::whole(SequenceSpace::full_shift({"0", "1"}));
  const auto b = ClopenSet::whole(SequenceSpace::full_shift({"0", "1"}));
  EXPECT_THROW(a.united(b), Error);
}

TEST(Clopen, BooleanLawsProperty) {
  Rng rng(1);
  std::size_t cases = 0;
  EXPECT_EQ(boolean_algebra_laws(rng, 300, cases), 0u);
  EXPECT_EQ(cases, 300u);
}
