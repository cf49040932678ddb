#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "tfg/expansivity.hpp"
#include "tfg/homology0.hpp"
#include "tfg/presentation.hpp"

namespace tfg::testing {

using Rng = std::mt19937_64;

inline std::size_t uniform(Rng& rng, std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }

// Complete prefix code of the space obtained by splitting a random leaf `splits` times.
inline std::vector<Word> random_code(const SequenceSpace& space, Rng& rng, std::size_t splits, std::size_t max_len = 5) {
  std::vector<Word> leaves{Word()};
  for (std::size_t s = 0; s < splits; ++s) {
    std::vector<std::size_t> open;
    for (std::size_t i = 0; i < leaves.size(); ++i)
      if (leaves[i].size() < max_len) open.push_back(i);
    if (open.empty()) break;
    const auto i = open[uniform(rng, open.size())];
    const Word w = leaves[i];
    leaves.erase(leaves.begin() + static_cast<std::ptrdiff_t>(i));
    for (auto x : space.successors(w)) leaves.push_back(w + x);
  }
  std::sort(leaves.begin(), leaves.end());
  return leaves;
}

inline std::vector<Word> random_words(const SequenceSpace& space, Rng& rng, std::size_t count, std::size_t max_len) {
  std::vector<Word> out;
  for (std::size_t i = 0; i < count; ++i) {
    Word w;
    const auto len = uniform(rng, max_len + 1);
    while (w.size() < len) {
      const auto& next = space.successors(w);
      w.push_back(next[uniform(rng, next.size())]);
    }
    out.push_back(w);
  }
  return out;
}

inline ClopenSet random_clopen(const SpacePtr& space, Rng& rng, std::size_t max_len = 4) {
  return ClopenSet(space, random_words(*space, rng, uniform(rng, 4), max_len));
}

// Germ labels to draw from: identity and every base state.
inline std::vector<StateId> base_states(const GroupoidPtr& g) {
  std::vector<StateId> out{kIdentity};
  for (StateId s = 1; s < g->germs().size(); ++s)
    if (g->germs().is_base(s)) out.push_back(s);
  return out;
}

// Full group element of a full shift: two prefix codes of equal size matched
// by a random bijection, with random germ labels.
inline FullGroupElement random_element(const GroupoidPtr& g, Rng& rng, std::size_t splits = 3) {
  const auto& space = *g->space();
  const auto k = std::max<std::size_t>(splits, 1);
  const auto s = uniform(rng, k + 1);
  auto dom = random_code(space, rng, s);
  auto ran = random_code(space, rng, s);
  while (ran.size() != dom.size()) ran = random_code(space, rng, s);
  std::shuffle(ran.begin(), ran.end(), rng);
  const auto labels = base_states(g);
  std::vector<Arrow> arrows;
  for (std::size_t i = 0; i < dom.size(); ++i) arrows.push_back(Arrow{dom[i], labels[uniform(rng, labels.size())], ran[i], {}});
  return FullGroupElement(Bisection(g, std::move(arrows)));
}

// Random sub-bisection of a random element.
inline Bisection random_bisection(const GroupoidPtr& g, Rng& rng) {
  const auto e = random_element(g, rng);
  std::vector<Arrow> keep;
  for (const auto& a : e.table().arrows())
    if (uniform(rng, 3) != 0) keep.push_back(a);
  return Bisection(g, std::move(keep));
}

// Binary and ternary full shifts, the ternary one carrying the automaton a.
inline GroupoidPtr binary_shift() { return make_groupoid(SequenceSpace::full_shift({"0", "1"})); }

inline GroupoidPtr ternary_with_automaton() {
  auto g = make_groupoid(SequenceSpace::full_shift({"1", "2", "3"}));
  AutomatonSpec a;
  a.name = "a";
  a.states.push_back({"a", {{"1", "2", "id"}, {"2", "1", "a"}, {"3", "3", "id"}}});
  g->germs().add_automaton(a, *g->space());
  return g;
}

inline GroupoidPtr binary_with_odometer() {
  auto g = binary_shift();
  AutomatonSpec b;
  b.name = "b";
  b.states.push_back({"b", {{"0", "1", "id"}, {"1", "0", "b"}}});
  g->germs().add_automaton(b, *g->space());
  return g;
}

// Point of the cylinder w extended to a depth-n word.
inline Word extend(const SequenceSpace& space, Rng& rng, Word w, std::size_t n) {
  while (w.size() < n) {
    const auto& next = space.successors(w);
    w.push_back(next[uniform(rng, next.size())]);
  }
  return w;
}

// Image of a long word under a full group element, truncated to the part that
// the table determines.
inline Word act(const FullGroupElement& g, const Word& w) {
  for (const auto& a : g.table().arrows())
    if (is_prefix(a.dom, w)) return a.ran + g.groupoid()->germs().apply(a.germ, w.substr(a.dom.size()));
  throw Error("word not covered by the table");
}

// Property suites: each returns the number of failures and adds to `cases`.

inline std::size_t boolean_algebra_laws(Rng& rng, std::size_t n, std::size_t& cases) {
  std::size_t fails = 0;
  const std::vector<SpacePtr> spaces{
      SequenceSpace::full_shift({"0", "1"}), SequenceSpace::full_shift({"a", "b", "c"}),
      SequenceSpace::sft({"0", "1"}, {{"0", "0"}, {"0", "1"}, {"1", "0"}})};
  for (std::size_t i = 0; i < n; ++i) {
    const auto& s = spaces[i % spaces.size()];
    const auto a = random_clopen(s, rng), b = random_clopen(s, rng), c = random_clopen(s, rng);
    const auto whole = ClopenSet::whole(s), none = ClopenSet::empty(s);
    bool ok = a.united(b) == b.united(a) && a.intersected(b) == b.intersected(a) &&
              a.united(b.united(c)) == a.united(b).united(c) &&
              a.intersected(b.united(c)) == a.intersected(b).united(a.intersected(c)) &&
              a.united(b).complemented() == a.complemented().intersected(b.complemented()) &&
              a.united(a.complemented()) == whole && a.intersected(a.complemented()) == none &&
              a.complemented().complemented() == a && a.minus(b) == a.intersected(b.complemented()) &&
              a.intersected(b).is_subset(a) && a.is_disjoint(a.complemented()) && a.united(none) == a;
    // membership agrees with the antichain description on sample points
    for (const auto& w : random_words(*s, rng, 4, 6)) {
      const auto p = extend(*s, rng, w, 7);
      ok = ok && a.united(b).contains_cylinder(p) == (a.contains_cylinder(p) || b.contains_cylinder(p));
    }
    ++cases;
    if (!ok) ++fails;
  }
  return fails;
}

inline std::size_t cocycle_identity(Rng& rng, std::size_t n, std::size_t& cases) {
  std::size_t fails = 0;
  const std::vector<GroupoidPtr> gs{ternary_with_automaton(), binary_with_odometer()};
  for (std::size_t i = 0; i < n; ++i) {
    const auto& g = gs[i % gs.size()];
    auto& alg = g->germs();
    auto random_state = [&] {
      const auto base = base_states(g);
      StateId s = base[uniform(rng, base.size())];
      for (std::size_t k = uniform(rng, 3); k > 0; --k) s = alg.compose(s, base[uniform(rng, base.size())]);
      return s;
    };
    const auto a = random_state(), b = random_state();
    const auto w = extend(*g->space(), rng, Word(), 1 + uniform(rng, 6));
    const auto ab = alg.compose(a, b);
    const auto bw = alg.apply(b, w);
    bool ok = alg.apply(ab, w) == alg.apply(a, bw) &&
              alg.residual(ab, w) == alg.compose(alg.residual(a, bw), alg.residual(b, w)) &&
              alg.apply(alg.inverse(a), alg.apply(a, w)) == w && alg.compose(a, alg.inverse(a)) == kIdentity;
    ++cases;
    if (!ok) ++fails;
  }
  return fails;
}

inline std::size_t bisection_associativity(Rng& rng, std::size_t n, std::size_t& cases) {
  std::size_t fails = 0;
  const std::vector<GroupoidPtr> gs{binary_shift(), ternary_with_automaton(), binary_with_odometer()};
  for (std::size_t i = 0; i < n; ++i) {
    const auto& g = gs[i % gs.size()];
    const auto a = random_bisection(g, rng), b = random_bisection(g, rng), c = random_bisection(g, rng);
    bool ok = compose(compose(a, b), c).equals(compose(a, compose(b, c))) &&
              compose(a, b).inverse().equals(compose(b.inverse(), a.inverse())) &&
              compose(a, a.inverse()).equals(Bisection::identity(g, a.range())) &&
              compose(a, b).source().is_subset(b.source());
    ++cases;
    if (!ok) ++fails;
  }
  return fails;
}

inline std::size_t group_axioms(Rng& rng, std::size_t n, std::size_t& cases) {
  std::size_t fails = 0;
  const std::vector<GroupoidPtr> gs{binary_shift(), ternary_with_automaton(), binary_with_odometer()};
  for (std::size_t i = 0; i < n; ++i) {
    const auto& g = gs[i % gs.size()];
    const auto x = random_element(g, rng), y = random_element(g, rng), z = random_element(g, rng);
    const auto one = FullGroupElement::identity(g);
    bool ok = multiply(multiply(x, y), z).equals(multiply(x, multiply(y, z))) && multiply(x, one).equals(x) &&
              multiply(one, x).equals(x) && multiply(x, invert(x)).is_identity() &&
              multiply(invert(x), x).is_identity() && invert(multiply(x, y)).equals(multiply(invert(y), invert(x))) &&
              commutator(x, y).equals(multiply(multiply(invert(x), invert(y)), multiply(x, y))) &&
              conjugate(x, y).equals(multiply(invert(y), multiply(x, y))) &&
              (x.key() == y.key()) == x.equals(y);
    // action on points: (xy)(w) = x(y(w))
    const auto w = extend(*g->space(), rng, Word(), 8);
    ok = ok && act(multiply(x, y), w) == act(x, act(y, w));
    ++cases;
    if (!ok) ++fails;
  }
  return fails;
}

inline std::size_t support_laws(Rng& rng, std::size_t n, std::size_t& cases) {
  std::size_t fails = 0;
  const std::vector<GroupoidPtr> gs{binary_shift(), make_groupoid(SequenceSpace::full_shift({"a", "b", "c"}))};
  for (std::size_t i = 0; i < n; ++i) {
    const auto& g = gs[i % gs.size()];
    const auto x = random_element(g, rng), y = random_element(g, rng);
    const auto sx = support(x), sy = support(y);
    // image of sx under y⁻¹
    const auto moved = invert(y).table().restrict(sx).range();
    bool ok = support(invert(x)) == sx && support(multiply(x, y)).is_subset(sx.united(sy)) &&
              support(conjugate(x, y)) == moved && support(FullGroupElement::identity(g)).is_empty() &&
              (sx.is_empty() == x.is_identity());
    // points outside the support are fixed
    const auto w = extend(*g->space(), rng, Word(), 8);
    if (!sx.contains_cylinder(w.substr(0, sx.max_depth()))) ok = ok && act(x, w) == w;
    // disjoint supports commute
    if (sx.is_disjoint(sy)) ok = ok && multiply(x, y).equals(multiply(y, x));
    ++cases;
    if (!ok) ++fails;
  }
  return fails;
}

}  // namespace tfg::testing
