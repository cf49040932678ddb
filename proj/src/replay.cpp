#include "tfg/replay.hpp"

#include <algorithm>
#include <filesystem>
#include <set>
#include <sstream>

#include "json.hpp"
#include "tfg/expr.hpp"
#include "tfg/homology0.hpp"

namespace tfg {

namespace {

CheckResult outcome(std::string name, bool ok, std::string detail) {
  return CheckResult{std::move(name), ok ? Status::pass : Status::fail, std::move(detail)};
}

template <class F>
CheckResult guarded(const std::string& name, F&& f) {
  try {
    return f();
  } catch (const std::exception& e) {
    return CheckResult{name, Status::fail, e.what()};
  }
}

std::string word_text(const GeneratorWord& w) {
  std::string out;
  for (const auto& [i, e] : w) out += (out.empty() ? "" : " ") + std::string("g") + std::to_string(i) + (e < 0 ? "^-1" : "");
  return out.empty() ? "(empty word)" : out;
}

void worked_example(const Presentation& p, std::vector<CheckResult>& out) {
  const auto* g = p.element("g");
  const auto* h = p.element("h");
  const auto* gh = p.element("gh_displayed");
  if (!g || !h || !gh) {
    out.push_back({"worked_example", Status::fail, "elements g, h, gh_displayed are required"});
    return;
  }
  out.push_back(guarded("worked_example: g conjugate to h by tau-words of length <= 4", [&] {
    const auto gens = tau_generators(p.groupoid, 2);
    const auto r = conjugator_search(*g, *h, gens, 4, 200000);
    if (!r.found) return CheckResult{"worked_example: g conjugate to h by tau-words of length <= 4", Status::inconclusive,
                                     "no conjugator among " + std::to_string(r.explored) + " words"};
    return outcome("worked_example: g conjugate to h by tau-words of length <= 4", true,
                   "conjugator word length " + std::to_string(r.word.size()));
  }));
  out.push_back(guarded("worked_example: H0 = Z/2 and 1_U is its generator", [&] {
    const auto h0 = h0_z2(p.groupoid, p.basic, 2, 3);
    const bool ok = h0.dimension() == 1 && !h0.is_zero(ClopenSet::cylinder(p.groupoid->space(), p.groupoid->space()->parse("11")));
    return outcome("worked_example: H0 = Z/2 and 1_U is its generator", ok, "depth 2: " + h0.describe());
  }));
  out.push_back(guarded("worked_example: gh in A by bounded search", [&] {
    const auto gs = generating_set(p.groupoid, p.basic, 2);
    std::vector<FullGroupElement> gens = gs.generators;
    const auto r = bounded_membership(*gh, gens, 20, 20000);
    const std::string name = "worked_example: gh in A by bounded search";
    if (r.found) return outcome(name, true, "witness " + word_text(r.word));
    return CheckResult{name, Status::inconclusive,
                       std::to_string(gens.size()) + " generators; complete to length " +
                           std::to_string(r.reached_length) + " after " + std::to_string(r.explored) + " states"};
  }));
}

std::vector<std::vector<Perm>> diagonal_pair_generators() {
  std::vector<std::vector<Perm>> gens;
  const auto one = perm_identity(5);
  for (const auto& pi : alternating_group(5)) {
    gens.push_back({pi, pi, one});
    gens.push_back({one, pi, pi});
  }
  return gens;
}

void fibonacci(const Presentation& p, std::vector<CheckResult>& out) {
  const auto& q = *p.quasicrystal;
  const auto ps = cut_and_project(q.params, q.lo, q.hi);
  const std::string tag = p.name + ": ";
  out.push_back(guarded(tag + "Delaunay", [&] {
    const auto d = check_delaunay(ps, 1.62, 0.99, 2.0);
    return outcome(tag + "Delaunay", d.ok, d.ok ? "delta 0.99, R 1.62, margin 2" : d.counterexample);
  }));
  out.push_back(guarded(tag + "gap word", [&] {
    const auto w = fibonacci_gap_word(ps);
    const std::size_t n = std::min<std::size_t>(100, w.size());
    return outcome(tag + "gap word", n == 100 && w.substr(0, n) == fibonacci_word(n),
                   "first " + std::to_string(n) + " letters against the substitution fixed point");
  }));
  out.push_back(guarded(tag + "Rips complex", [&] {
    const auto r = rips_h1_z2(ps, ZPhi::phi().to_double());
    return outcome(tag + "Rips complex", r.connected() && r.beta1 == 0,
                   "R = φ: components " + std::to_string(r.components) + ", beta1 " + std::to_string(r.beta1));
  }));
  if (q.rule) {
    out.push_back(guarded(tag + "local rule orbits", [&] {
      const auto lr = local_rule_permutation(ps, q.rule->radius, gap_pattern_rule(q.rule->pattern, q.rule->cycle));
      std::set<std::size_t> lengths(lr.orbit_lengths.begin(), lr.orbit_lengths.end());
      std::string text;
      for (auto l : lengths) text += (text.empty() ? "" : ",") + std::to_string(l);
      const std::set<std::size_t> allowed{1, 3};
      return outcome(tag + "local rule orbits",
                     std::includes(allowed.begin(), allowed.end(), lengths.begin(), lengths.end()),
                     "orbit lengths {" + text + "}");
    }));
  }
  out.push_back(guarded(tag + "generating set of the symbolic presentation", [&] {
    const auto sym = symbolic_presentation(ps);
    const auto gs = generating_set(sym.groupoid, sym.basic, 3);
    bool ok = !gs.generators.empty() && gs.m.missing.empty();
    for (const auto& m : gs.m.multisections) ok = ok && !m.validate();
    return outcome(tag + "generating set of the symbolic presentation", ok,
                   std::to_string(gs.generators.size()) + " generators from " +
                       std::to_string(gs.m.multisections.size()) + " multisections");
  }));
}

}  // namespace

std::string to_string(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::inconclusive:
      break;
  }
  return "inconclusive";
}

Status SuiteReport::overall() const {
  Status s = Status::pass;
  for (const auto& r : results) {
    if (r.status == Status::fail) return Status::fail;
    if (r.status == Status::inconclusive) s = Status::inconclusive;
  }
  return s;
}

std::vector<FullGroupElement> tau_generators(const GroupoidPtr& groupoid, std::size_t max_len) {
  const auto& space = *groupoid->space();
  std::vector<Word> words;
  for (std::size_t n = 1; n <= max_len; ++n)
    for (auto& w : space.words_of_length(n)) words.push_back(std::move(w));
  std::vector<FullGroupElement> out;
  for (std::size_t i = 0; i < words.size(); ++i)
    for (std::size_t j = i + 1; j < words.size(); ++j) {
      const auto& v = words[i];
      const auto& u = words[j];
      if (comparable(v, u) || !space.tail_compatible(v, u)) continue;
      out.push_back(tau(Bisection(groupoid, {Arrow{v, kIdentity, u, literal_tag(v, kIdentity, u)}})));
    }
  return out;
}

std::vector<CheckResult> run_stored_checks(const Presentation& p) {
  std::vector<CheckResult> out;
  for (std::size_t i = 0; i < p.checks.size(); ++i) {
    const auto& c = p.checks[i];
    std::string name = p.name + ": " + c.kind;
    for (const auto& a : c.args) name += " " + a;
    out.push_back(guarded(name, [&] {
      auto need = [&](std::size_t n) {
        if (c.args.size() != n) throw Error(c.kind + " needs " + std::to_string(n) + " arguments");
      };
      if (c.kind == "equal" || c.kind == "not_equal") {
        need(2);
        const bool eq = evaluate(c.args[0], p).equals(evaluate(c.args[1], p));
        return outcome(name, eq == (c.kind == "equal"), c.note);
      }
      if (c.kind == "table") {
        need(2);
        const auto text = evaluate(c.args[0], p).to_string();
        return outcome(name, text == c.args[1], text == c.args[1] ? c.note : "got " + text);
      }
      if (c.kind == "identity") {
        need(1);
        return outcome(name, evaluate(c.args[0], p).is_identity(), c.note);
      }
      throw Error("unknown check kind '" + c.kind + "'");
    }));
  }
  return out;
}

SuiteReport verify_bundled(const std::string& dir) {
  namespace fs = std::filesystem;
  SuiteReport rep;
  std::vector<std::string> files;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.path().extension() == ".json") files.push_back(e.path().string());
  std::sort(files.begin(), files.end());
  std::vector<Presentation> loaded;
  for (const auto& f : files) {
    try {
      loaded.push_back(load_presentation(f));
      rep.results.push_back({"load " + fs::path(f).filename().string(), Status::pass, ""});
    } catch (const std::exception& e) {
      rep.results.push_back({"load " + fs::path(f).filename().string(), Status::fail, e.what()});
    }
  }
  auto find = [&](const std::string& name) -> const Presentation* {
    for (const auto& p : loaded)
      if (p.name == name) return &p;
    return nullptr;
  };
  for (const auto& p : loaded)
    for (auto& r : run_stored_checks(p)) rep.results.push_back(std::move(r));

  if (const auto* p = find("worked_example")) worked_example(*p, rep.results);

  rep.results.push_back(guarded("A5 x A5 x A5 closure of (π,π,1), (1,π,π)", [&] {
    const auto n = product_closure_order(5, 3, diagonal_pair_generators());
    return outcome("A5 x A5 x A5 closure of (π,π,1), (1,π,π)", n == 216000, "order " + std::to_string(n));
  }));

  if (const auto* p = find("full_shift_2")) {
    rep.results.push_back(guarded("full shift 2: expansive at (n,n), n <= 6", [&] {
      const auto cover = p->cover("basic");
      std::string detail;
      bool ok = true;
      for (std::size_t n = 1; n <= 6; ++n) {
        const auto r = separation_check(cover, n, n);
        ok = ok && r.verdict == Verdict::expansive;
        detail += (n > 1 ? ", " : "") + to_string(r.verdict);
      }
      return outcome("full shift 2: expansive at (n,n), n <= 6", ok, detail);
    }));
  }
  for (const std::string name : {"bratteli", "odometer"}) {
    const auto* p = find(name);
    if (!p) continue;
    rep.results.push_back(guarded(name + ": not expansive", [&] {
      const auto r = separation_check(p->cover("basic"), 3, 6);
      return outcome(name + ": not expansive", r.verdict == Verdict::refuted, to_string(r.verdict) + "; " + r.certificate);
    }));
  }
  for (int k = 2; k <= 5; ++k) {
    const auto* p = find("full_shift_" + std::to_string(k));
    if (!p) continue;
    const std::string name = "H0 of the " + std::to_string(k) + "-letter full shift";
    rep.results.push_back(guarded(name, [&] {
      bool ok = true;
      std::string detail;
      for (std::size_t d = 1; d <= 3; ++d) {
        const auto h = h0_z2(p->groupoid, p->basic, d, 3);
        ok = ok && h.dimension() == (k % 2 == 1 ? 1u : 0u);
        detail += (d > 1 ? ", " : "") + h.describe();
      }
      return outcome(name, ok, detail);
    }));
  }
  for (const auto& p : loaded)
    if (p.quasicrystal && p.quasicrystal->params.kind == CutProjectParams::Kind::fibonacci) fibonacci(p, rep.results);
  return rep;
}

std::string report_text(const SuiteReport& r) {
  std::ostringstream os;
  for (const auto& c : r.results) {
    os << to_string(c.status) << "  " << c.name;
    if (!c.detail.empty()) os << "  [" << c.detail << "]";
    os << '\n';
  }
  os << "overall: " << to_string(r.overall()) << '\n';
  return os.str();
}

std::string report_json(const SuiteReport& r) {
  nlohmann::json j;
  j["overall"] = to_string(r.overall());
  j["checks"] = nlohmann::json::array();
  for (const auto& c : r.results) j["checks"].push_back({{"name", c.name}, {"status", to_string(c.status)}, {"detail", c.detail}});
  return j.dump(2);
}

}  // namespace tfg
