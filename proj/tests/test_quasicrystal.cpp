#include <gtest/gtest.h>

#include <cmath>

#include "random_objects.hpp"

using namespace tfg;
using namespace tfg::testing;

namespace {

const double kPhi = (1 + std::sqrt(5.0)) / 2;

CutProjectParams fib() { return CutProjectParams{}; }

// Points m + nφ with conjugate m + n(1-φ) in [-1, φ-1), by brute enumeration in doubles.
std::vector<double> brute_fibonacci(double lo, double hi) {
  std::vector<double> out;
  for (long n = -400; n <= 400; ++n)
    for (long m = -700; m <= 700; ++m) {
      const double x = m + n * kPhi;
      const double s = m + n * (1 - kPhi);
      if (x >= lo && x <= hi && s >= -1 && s < kPhi - 1) out.push_back(x);
    }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(ZPhi, Arithmetic) {
  const auto phi = ZPhi::phi();
  EXPECT_EQ(phi * phi, (phi + ZPhi{1, 0}));
  EXPECT_EQ(phi.star(), (ZPhi{1, -1}));
  EXPECT_EQ((phi * phi.star()), (ZPhi{-1, 0}));
  EXPECT_LT((ZPhi{1, 0}), phi);
  EXPECT_GT((ZPhi{-1, 1}), (ZPhi{0, 0}));
  EXPECT_EQ((ZPhi{0, 0}).sign(), 0);
  EXPECT_EQ(phi.to_string(), "φ");
}

TEST(ZPhi, SignMatchesDoubles) {
  Rng rng(51);
  for (int i = 0; i < 2000; ++i) {
    const ZPhi x{static_cast<std::int64_t>(uniform(rng, 20001)) - 10000,
                 static_cast<std::int64_t>(uniform(rng, 20001)) - 10000};
    const double v = x.a + x.b * kPhi;
    if (std::abs(v) > 1e-6) EXPECT_EQ(x.sign(), v > 0 ? 1 : -1);
    EXPECT_NEAR(x.to_double(), v, 1e-9 * (1 + std::abs(v)));
  }
  // close to zero: F(n+1) - F(n)φ alternates in sign
  std::int64_t a = 1, b = 1;
  for (int n = 0; n < 60; ++n) {
    const int expect = n % 2 == 0 ? -1 : 1;
    EXPECT_EQ((ZPhi{b, -a}).sign(), expect) << n;
    const auto c = a + b;
    a = b;
    b = c;
  }
}

TEST(Quasicrystal, FibonacciPointsMatchBruteForce) {
  const auto ps = cut_and_project(fib(), 0, 200);
  const auto brute = brute_fibonacci(0, 200);
  ASSERT_EQ(ps.points.size(), brute.size());
  for (std::size_t i = 0; i < brute.size(); ++i) EXPECT_NEAR(ps.points[i][0].to_double(), brute[i], 1e-9);
}

TEST(Quasicrystal, GapWordIsSubstitutionFixedPoint) {
  const auto ps = cut_and_project(fib(), 0, 200);
  const auto w = fibonacci_gap_word(ps);
  ASSERT_GE(w.size(), 100u);
  EXPECT_EQ(w.substr(0, 100), fibonacci_word(100));
  EXPECT_EQ(fibonacci_word(8), "LSLLSLSL");
}

TEST(Quasicrystal, Delaunay) {
  const auto ps = cut_and_project(fib(), 0, 200);
  EXPECT_TRUE(check_delaunay(ps, 1.62, 0.99, 2.0).ok);
  const auto bad = check_delaunay(ps, 1.62, 1.5, 2.0);
  EXPECT_FALSE(bad.ok);
  EXPECT_FALSE(bad.counterexample.empty());
  EXPECT_FALSE(check_delaunay(ps, 0.7, 0.5, 2.0).ok);
}

TEST(Quasicrystal, PatchCountsAreComplexity) {
  // a radius-R patch of the Fibonacci chain is determined by a factor of the
  // gap word; the count grows like the factor complexity n + 1
  const auto ps = cut_and_project(fib(), 0, 400);
  EXPECT_EQ(local_complexity(ps, 0.5).classes.size(), 1u);
  EXPECT_EQ(local_complexity(ps, 1.1).classes.size(), 3u);
  const auto c = local_complexity(ps, 1.7);
  std::size_t total = 0;
  for (const auto& k : c.classes) total += k.occurrences;
  std::size_t interior = 0;
  for (auto x : c.class_of) interior += x >= 0;
  EXPECT_EQ(total, interior);
}

TEST(Quasicrystal, LatticeIsPeriodicAndUnresolved) {
  CutProjectParams p;
  p.kind = CutProjectParams::Kind::lattice;
  const auto ps = cut_and_project(p, 0, 60);
  ASSERT_TRUE(ps.period.has_value());
  EXPECT_EQ(local_complexity(ps, 3).classes.size(), 1u);
  EXPECT_FALSE(translation_bisections(ps, 1.5).resolved);
}

TEST(Quasicrystal, TranslationCoverResolves) {
  const auto ps = cut_and_project(fib(), 0, 300);
  const auto t = translation_bisections(ps, 1.7);
  EXPECT_TRUE(t.resolved);
  for (const auto& piece : t.pieces) EXPECT_NE(piece.source, piece.range);
}

TEST(Quasicrystal, RepetitivityIsFinite) {
  const auto ps = cut_and_project(fib(), 0, 300);
  const auto r = repetitivity_radius(ps, 1.7);
  ASSERT_TRUE(r.D.has_value());
  EXPECT_GT(*r.D, 1.7);
}

TEST(Quasicrystal, LocalRuleOrbits) {
  const auto ps = cut_and_project(fib(), 0, 200);
  const auto lr = local_rule_permutation(ps, 4.5, gap_pattern_rule("SLL", 3));
  for (auto l : lr.orbit_lengths) EXPECT_TRUE(l == 1 || l == 3) << l;
  EXPECT_EQ(lr.domain.size(), lr.image.size());
  // a radius too small to see the pattern leaves the rule undefined somewhere
  EXPECT_THROW(local_rule_permutation(ps, 0.5, gap_pattern_rule("SLL", 3)), Error);
}

TEST(Quasicrystal, RipsComplex) {
  const auto ps = cut_and_project(fib(), 0, 100);
  const auto r = rips_h1_z2(ps, kPhi + 1e-6);
  EXPECT_TRUE(r.connected());
  EXPECT_EQ(r.beta1, 0u);
  // below the short gap the complex falls apart
  EXPECT_EQ(rips_h1_z2(ps, 0.9).components, ps.points.size());
  EXPECT_EQ(r.vertices, ps.points.size());
}

TEST(Quasicrystal, SymbolicPresentation) {
  const auto ps = cut_and_project(fib(), 0, 200);
  const auto sym = symbolic_presentation(ps);
  EXPECT_EQ(sym.letter_lengths.size(), 2u);
  EXPECT_THROW(sym.groupoid->space()->parse("SS"), Error);
  const auto gs = generating_set(sym.groupoid, sym.basic, 3);
  EXPECT_FALSE(gs.generators.empty());
  for (const auto& m : gs.m.multisections) EXPECT_FALSE(m.validate().has_value());
}

TEST(Quasicrystal, GridStatistics) {
  CutProjectParams p;
  p.kind = CutProjectParams::Kind::fibonacci_grid;
  const auto ps = cut_and_project(p, 0, 20);
  EXPECT_EQ(ps.dimension, 2u);
  EXPECT_TRUE(check_delaunay(ps, 1.62 * std::sqrt(2.0), 0.99, 2.0).ok);
  EXPECT_FALSE(local_complexity(ps, 1.1).classes.empty());
}

TEST(Quasicrystal, CsvHasOneLinePerPoint) {
  const auto ps = cut_and_project(fib(), 0, 20);
  const auto csv = to_csv(ps);
  EXPECT_EQ(static_cast<std::size_t>(std::count(csv.begin(), csv.end(), '\n')), ps.points.size() + 1);
}
