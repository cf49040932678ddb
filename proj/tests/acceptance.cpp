// Acceptance run: one line per criterion, exit status 1 if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>

#include "multisection_fixtures.hpp"
#include "tfg/expr.hpp"
#include "tfg/replay.hpp"

using namespace tfg;
using namespace tfg::testing;

namespace {

struct Outcome {
  bool ok = false;
  std::string detail;
};

Presentation load(const std::string& name) { return load_presentation(data_dir() + "/" + name + ".json"); }

int failures = 0;

void criterion(int n, double limit_s, const std::function<Outcome()>& f) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = f();
  } catch (const std::exception& e) {
    o = {false, std::string("error: ") + e.what()};
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (s > limit_s) {
    o.ok = false;
    o.detail += "; over the time limit of " + std::to_string(static_cast<int>(limit_s)) + " s";
  }
  if (!o.ok) ++failures;
  std::printf("criterion %d: %s  (%.2f s)  %s\n", n, o.ok ? "PASS" : "FAIL", s, o.detail.c_str());
  std::fflush(stdout);
}

Outcome worked_example() {
  const auto p = load("worked_example");
  const auto& g = *p.element("g");
  const auto& h = *p.element("h");
  const bool tables = g.equals(*p.element("g_split"));
  const auto taus = tau_generators(p.groupoid, 2);
  const auto conj = conjugator_search(g, h, taus, 4, 200000);
  const auto gh = multiply(g, h).to_string();
  const auto shown = p.element("gh_displayed")->to_string();
  std::string d = std::string("two tables for g ") + (tables ? "equal" : "differ");
  d += conj.found ? "; conjugator of length " + std::to_string(conj.word.size()) : "; no conjugator up to length 4";
  d += gh == shown ? "; g·h matches the displayed table" : "; g·h = " + gh + " but displayed " + shown;
  return {tables && conj.found && gh == shown, d};
}

Outcome a5_cubed_closure() {
  std::vector<std::vector<Perm>> gens;
  const auto one = perm_identity(5);
  for (const auto& pi : alternating_group(5)) {
    gens.push_back({pi, pi, one});
    gens.push_back({one, pi, pi});
  }
  const auto n = product_closure_order(5, 3, gens);
  return {n == 216000, "order " + std::to_string(n)};
}

Outcome multisections() {
  Rng rng(3);
  const auto g = ternary_with_automaton();
  std::size_t valid = 0;
  for (int i = 0; i < 200; ++i) valid += !random_multisection(g, rng, 3 + i % 3).validate().has_value();

  std::size_t hom3 = 0;
  const auto m3 = random_multisection(g, rng, 3);
  const auto s3 = symmetric_group(3);
  for (const auto& p : s3)
    for (const auto& q : s3) hom3 += embed(m3, perm_multiply(p, q)).equals(multiply(embed(m3, p), embed(m3, q)));

  std::size_t hom5 = 0;
  const auto m5 = random_multisection(g, rng, 5);
  const auto s5 = symmetric_group(5);
  for (int i = 0; i < 100; ++i) {
    const auto& p = s5[uniform(rng, s5.size())];
    const auto& q = s5[uniform(rng, s5.size())];
    hom5 += embed(m5, perm_multiply(p, q)).equals(multiply(embed(m5, p), embed(m5, q)));
  }

  const auto b = binary_shift();
  const auto& s = b->space();
  const auto whole = five_cylinders(b);
  const auto split = split_by_cover(whole, restrict(whole, make_clopen(s, {"0000", "00010"}), 0),
                                    restrict(whole, make_clopen(s, {"0001"}), 0));
  std::vector<FullGroupElement> parts;
  for (const auto* piece : {&split.common, &split.first, &split.second})
    for (auto& x : alternating_generators(*piece)) parts.push_back(std::move(x));
  std::size_t witnessed = 0, longest = 0;
  const auto targets = alternating_generators(whole);
  for (const auto& x : targets) {
    const auto r = bounded_membership(x, parts, 12, 200000);
    if (r.found) {
      ++witnessed;
      longest = std::max(longest, r.word.size());
    }
  }
  const bool ok = valid == 200 && hom3 == 36 && hom5 == 100 && witnessed == targets.size();
  return {ok, std::to_string(valid) + "/200 valid; embed " + std::to_string(hom3) + "/36 and " + std::to_string(hom5) +
                  "/100; covering witnesses " + std::to_string(witnessed) + "/" + std::to_string(targets.size()) +
                  " (longest " + std::to_string(longest) + ")"};
}

Outcome simplicity_identity() {
  const auto p = load("full_shift_2");
  const auto u = make_clopen(p.groupoid->space(), {"0"});
  const auto& h1 = *p.element("h1");
  const auto& h2 = *p.element("h2");
  const bool inside = support(h1).is_subset(u) && support(h2).is_subset(u);
  const bool depth3 = induced_permutation(h1, 3).has_value() && induced_permutation(h2, 3).has_value();
  const bool eq = evaluate("[[g^-1,h1],h2]", p).equals(evaluate("[h1,h2]", p));
  const bool nontrivial = !evaluate("[h1,h2]", p).is_identity();
  return {inside && depth3 && eq && nontrivial,
          std::string("supports in U: ") + (inside ? "yes" : "no") + "; identity " + (eq ? "holds" : "fails") +
              (nontrivial ? "; [h1,h2] is not the identity" : "; [h1,h2] is the identity")};
}

Outcome expansivity() {
  const auto p = load("full_shift_2");
  bool ok = true;
  std::string d = "binary shift:";
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto r = separation_check(p.cover("basic"), n, n);
    ok = ok && r.verdict == Verdict::expansive;
    d += " " + to_string(r.verdict);
  }
  for (const std::string name : {"bratteli", "odometer"}) {
    const auto r = separation_check(load(name).cover("basic"), 3, 6);
    ok = ok && r.verdict == Verdict::refuted;
    const bool closure = r.certificate.find("closure") != std::string::npos;
    d += "; " + name + " " + to_string(r.verdict) + (r.verdict == Verdict::refuted ? (closure ? " by finite closure" : " by level-preserving certificate") : "");
  }
  return {ok, d};
}

Outcome h0_parity() {
  bool ok = true;
  std::string d;
  for (int k = 2; k <= 5; ++k) {
    const auto p = load("full_shift_" + std::to_string(k));
    for (std::size_t depth = 1; depth <= 4; ++depth) {
      const auto h = h0_z2(p.groupoid, p.basic, depth, 3);
      ok = ok && h.dimension() == (k % 2 ? 1u : 0u);
      if (depth == 4) d += (k > 2 ? ", " : "") + std::string("k=") + std::to_string(k) + " " + h.describe();
    }
  }
  return {ok, d + " (depths 1..4)"};
}

Outcome generating_pipeline() {
  const auto p5 = load("full_shift_5");
  const auto r5 = generating_set(p5.groupoid, p5.basic, 1);
  std::vector<std::vector<Perm>> perms;
  for (const auto& x : r5.generators)
    if (const auto perm = induced_permutation(x, 1)) perms.push_back({*perm});
  const auto order = perms.empty() ? 0 : product_closure_order(5, 1, perms);

  const auto p3 = load("worked_example");
  const auto r3 = generating_set(p3.groupoid, p3.basic, 2);
  const auto m = bounded_membership(*p3.element("gh_displayed"), r3.generators, 20, 200000);

  const bool ok = r5.generators.size() <= 40 && order == 60 && m.found;
  std::string d = std::to_string(r5.generators.size()) + " generators on the 5-letter shift (limit 40); closure on cells " +
                  std::to_string(order) + "; gh ";
  d += m.found ? "witness of length " + std::to_string(m.word.size())
               : "not found among " + std::to_string(r3.generators.size()) + " generators (complete to length " +
                     std::to_string(m.reached_length) + ", " + std::to_string(m.explored) + " states)";
  return {ok, d};
}

Outcome quasicrystal() {
  const auto p = load("fibonacci");
  const auto& q = *p.quasicrystal;
  const auto ps = cut_and_project(q.params, 0, 200);
  const bool delaunay = check_delaunay(ps, 1.62, 0.99, 2.0).ok;
  const auto w = fibonacci_gap_word(ps);
  const bool word = w.size() >= 100 && w.substr(0, 100) == fibonacci_word(100);
  bool rips = true;
  for (double R : {ZPhi::phi().to_double(), 2.0, 2.5}) {
    const auto r = rips_h1_z2(ps, R);
    rips = rips && r.connected() && r.beta1 == 0;
  }
  const auto lr = local_rule_permutation(ps, q.rule->radius, gap_pattern_rule(q.rule->pattern, q.rule->cycle));
  std::set<std::size_t> lengths(lr.orbit_lengths.begin(), lr.orbit_lengths.end());
  const bool orbits = !lengths.empty() && std::all_of(lengths.begin(), lengths.end(), [](auto l) { return l == 1 || l == 3; });
  const auto sym = symbolic_presentation(ps);
  const auto gs = generating_set(sym.groupoid, sym.basic, 3);
  bool gens = !gs.generators.empty() && gs.m.missing.empty();
  for (const auto& m : gs.m.multisections) gens = gens && !m.validate().has_value();
  std::string d = std::string("Delaunay ") + (delaunay ? "ok" : "fails") + "; gap word " + (word ? "matches" : "differs") +
                  "; Rips " + (rips ? "connected, beta1 0" : "fails") + "; orbit lengths {";
  std::string ls;
  for (auto l : lengths) ls += (ls.empty() ? "" : ",") + std::to_string(l);
  d += ls + "}; " + std::to_string(gs.generators.size()) + " generators";
  return {delaunay && word && rips && orbits && gens, d};
}

Outcome properties() {
  Rng rng(9);
  std::size_t cases = 0, fails = 0;
  fails += boolean_algebra_laws(rng, 250, cases);
  fails += cocycle_identity(rng, 250, cases);
  fails += bisection_associativity(rng, 250, cases);
  fails += group_axioms(rng, 250, cases);
  fails += support_laws(rng, 250, cases);
  return {cases >= 1000 && fails == 0, std::to_string(cases) + " cases, " + std::to_string(fails) + " failures"};
}

}  // namespace

int main() {
  criterion(1, 1, worked_example);
  criterion(2, 10, a5_cubed_closure);
  criterion(3, 60, multisections);
  criterion(4, 1, simplicity_identity);
  criterion(5, 30, expansivity);
  criterion(6, 10, h0_parity);
  criterion(7, 300, generating_pipeline);
  criterion(8, 60, quasicrystal);
  criterion(9, 600, properties);
  std::printf("%d of 9 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
