#include <gtest/gtest.h>

#include <set>

#include "multisection_fixtures.hpp"

using namespace tfg;
using namespace tfg::testing;

TEST(Permutation, GroupOrders) {
  EXPECT_EQ(symmetric_group(4).size(), 24u);
  EXPECT_EQ(alternating_group(5).size(), 60u);
  for (const auto& p : alternating_group(5)) EXPECT_TRUE(perm_even(p));
}

TEST(Permutation, ClosureOfDiagonalPairs) {
  // {(π,π) : π ∈ A5} generates the diagonal copy of A5
  std::vector<std::vector<Perm>> gens;
  for (const auto& p : alternating_group(5)) gens.push_back({p, p});
  EXPECT_EQ(product_closure_order(5, 2, gens), 60u);
  // adding (π,1) gives all of A5×A5
  gens.push_back({perm_cycle(5, {0, 1, 2}), perm_identity(5)});
  EXPECT_EQ(product_closure_order(5, 2, gens), 3600u);
}

TEST(Permutation, CycleLengths) {
  EXPECT_EQ(cycle_lengths(perm_cycle(5, {0, 2, 4})), (std::vector<std::size_t>{1, 1, 3}));
  EXPECT_EQ(perm_multiply(perm_cycle(3, {0, 1}), perm_cycle(3, {1, 2})), perm_cycle(3, {0, 1, 2}));
}

TEST(Multisection, RandomFromSpokesValidate) {
  Rng rng(21);
  const auto g = ternary_with_automaton();
  for (int i = 0; i < 200; ++i) {
    const auto m = random_multisection(g, rng, 3 + i % 3);
    EXPECT_FALSE(m.validate().has_value()) << *m.validate();
  }
}

TEST(Multisection, ValidateCatchesBrokenCocycle) {
  const auto g = binary_shift();
  const auto m = five_cylinders(g);
  std::vector<std::vector<Bisection>> grid(5, std::vector<Bisection>(5));
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) grid[i][j] = m.at(i, j);
  grid[0][1] = Bisection::literal(g, {"000"}, {"id"}, {"001"}).inverse();
  EXPECT_TRUE(Multisection(g, grid).validate().has_value());
}

TEST(Multisection, EmbedIsHomomorphismDegree3) {
  Rng rng(22);
  const auto g = ternary_with_automaton();
  const auto m = random_multisection(g, rng, 3);
  const auto s3 = symmetric_group(3);
  for (const auto& p : s3)
    for (const auto& q : s3) EXPECT_TRUE(embed(m, perm_multiply(p, q)).equals(multiply(embed(m, p), embed(m, q))));
}

TEST(Multisection, EmbedIsHomomorphismDegree5) {
  Rng rng(23);
  const auto g = ternary_with_automaton();
  const auto m = random_multisection(g, rng, 5);
  const auto s5 = symmetric_group(5);
  for (int i = 0; i < 100; ++i) {
    const auto& p = s5[uniform(rng, s5.size())];
    const auto& q = s5[uniform(rng, s5.size())];
    EXPECT_TRUE(embed(m, perm_multiply(p, q)).equals(multiply(embed(m, p), embed(m, q))));
  }
}

TEST(Multisection, EmbedMovesComponents) {
  const auto g = binary_shift();
  const auto m = five_cylinders(g);
  const auto e = embed(m, perm_cycle(5, {0, 1, 2}));
  EXPECT_EQ(e.table().restrict(m.component(0)).range(), m.component(1));
  EXPECT_EQ(e.table().restrict(m.component(2)).range(), m.component(0));
  EXPECT_EQ(support(e), m.component(0).united(m.component(1)).united(m.component(2)));
}

TEST(Multisection, AlternatingGeneratorsGenerateA5OnCells) {
  const auto g = binary_shift();
  const auto m = five_cylinders(g);
  const auto gens = alternating_generators(m);
  ASSERT_EQ(gens.size(), 3u);
  std::vector<std::vector<Perm>> perms;
  for (const auto& x : gens) {
    Perm p(5, -1);
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j)
        if (x.table().restrict(m.component(i)).range() == m.component(j)) p[i] = j;
    ASSERT_TRUE(perm_valid(p));
    perms.push_back({p});
  }
  EXPECT_EQ(product_closure_order(5, 1, perms), 60u);
}

TEST(Multisection, RestrictAndSplitByCover) {
  const auto g = binary_shift();
  const auto& s = g->space();
  const auto m = five_cylinders(g);
  const auto f1 = restrict(m, make_clopen(s, {"0000", "00010"}), 0);
  const auto f2 = restrict(m, make_clopen(s, {"0001"}), 0);
  EXPECT_FALSE(f1.validate().has_value());
  const auto split = split_by_cover(m, f1, f2);
  EXPECT_EQ(split.common.component(0), make_clopen(s, {"00010"}));
  EXPECT_EQ(split.first.component(0), make_clopen(s, {"0000"}));
  EXPECT_EQ(split.second.component(0), make_clopen(s, {"00011"}));
  for (const auto* piece : {&split.common, &split.first, &split.second}) EXPECT_FALSE(piece->validate().has_value());
  EXPECT_THROW(split_by_cover(m, f1, f1), Error);
}

TEST(Multisection, CoveringWitness) {
  const auto g = binary_shift();
  const auto& s = g->space();
  const auto m = five_cylinders(g);
  const auto split = split_by_cover(m, restrict(m, make_clopen(s, {"0000", "00010"}), 0),
                                    restrict(m, make_clopen(s, {"0001"}), 0));
  std::vector<FullGroupElement> parts;
  for (const auto* piece : {&split.common, &split.first, &split.second})
    for (auto& x : alternating_generators(*piece)) parts.push_back(std::move(x));
  for (const auto& x : alternating_generators(m)) {
    const auto r = bounded_membership(x, parts, 12, 100000);
    ASSERT_TRUE(r.found);
    EXPECT_LE(r.word.size(), 3u);
    EXPECT_TRUE(evaluate_word(r.word, parts, g).equals(x));
  }
}

TEST(Multisection, GlueSharesComponentZero) {
  const auto g = binary_shift();
  const auto& s = *g->space();
  auto spokes = [&](std::vector<const char*> ws) {
    std::vector<Bisection> out;
    for (const auto* w : ws) out.push_back(Bisection(g, {Arrow{s.parse(ws[0]), kIdentity, s.parse(w), {}}}));
    return from_spokes(out, ClopenSet::cylinder(g->space(), s.parse(ws[0])));
  };
  const auto a = spokes({"00", "01", "10"});
  const auto b = spokes({"00", "110", "111"});
  const auto glued = glue(a, b);
  EXPECT_EQ(glued.degree(), 5);
  EXPECT_FALSE(glued.validate().has_value());
}
