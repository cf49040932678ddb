// tfg: command-line front end.
//
// Exit codes: 0 pass, 1 fail, 2 inconclusive or error.

#include <fstream>
#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "json.hpp"
#include "tfg/expr.hpp"
#include "tfg/homology0.hpp"
#include "tfg/replay.hpp"

using namespace tfg;
using nlohmann::json;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kOther = 2;

int exit_code(Status s) { return s == Status::pass ? kPass : s == Status::fail ? kFail : kOther; }

void emit(bool as_json, const json& j, const std::string& text) {
  if (as_json)
    std::cout << j.dump(2) << '\n';
  else
    std::cout << text;
}

std::string word_text(const GeneratorWord& w) {
  std::string out;
  for (const auto& [i, e] : w) out += (out.empty() ? "" : " ") + ("g" + std::to_string(i)) + (e < 0 ? "^-1" : "");
  return out;
}

int cmd_algebra(const std::string& file, const std::vector<std::string>& exprs, bool as_json) {
  const auto p = load_presentation(file);
  json j = json::array();
  std::string text;
  bool all_true = true;
  for (const auto& e : exprs) {
    const auto v = eval(e, p);
    if (v.truth) {
      all_true = all_true && *v.truth;
      j.push_back({{"expr", e}, {"value", *v.truth}});
      text += e + "  ->  " + (*v.truth ? "true" : "false") + "\n";
    } else {
      j.push_back({{"expr", e}, {"table", v.element->to_string()}});
      text += e + " = " + v.element->to_string() + "\n";
    }
  }
  emit(as_json, j, text);
  return all_true ? kPass : kFail;
}

int cmd_validate(const std::string& file, bool as_json) {
  const auto p = load_presentation(file);
  json j{{"name", p.name},
         {"bisections", p.bisections.size()},
         {"basic", p.basic.size()},
         {"elements", p.elements.size()},
         {"multisections", p.multisections.size()},
         {"covers", p.covers.size()},
         {"checks", p.checks.size()}};
  if (p.groupoid) j["space"] = p.groupoid->space()->describe();
  std::string text = p.origin + ": ok\n";
  for (const auto& [k, v] : j.items())
    if (k != "name") text += "  " + k + ": " + (v.is_string() ? v.get<std::string>() : v.dump()) + "\n";
  emit(as_json, j, text);
  return kPass;
}

int cmd_gens(const std::string& file, std::size_t depth, bool list, bool as_json) {
  const auto p = load_presentation(file);
  if (!p.groupoid) throw Error("presentation has no groupoid");
  const auto r = generating_set(p.groupoid, p.basic, depth);
  std::size_t invalid = 0;
  for (const auto& m : r.m.multisections)
    if (m.validate()) ++invalid;
  json j{{"depth", depth},
         {"parts", r.partition.partition.size()},
         {"orbit_check", r.partition.orbits.verified ? "verified" : "undetermined"},
         {"cover", r.cover.elements.size()},
         {"augmentation", r.cover.augmentation.size()},
         {"T", r.t.size()},
         {"M", r.m.multisections.size()},
         {"missing", r.m.missing.size()},
         {"invalid_multisections", invalid},
         {"generators", r.generators.size()}};
  std::string text;
  for (const auto& [k, v] : j.items()) text += k + ": " + (v.is_string() ? v.get<std::string>() : v.dump()) + "\n";
  if (list) {
    json tables = json::array();
    for (std::size_t i = 0; i < r.generators.size(); ++i) {
      tables.push_back(r.generators[i].to_string());
      text += "g" + std::to_string(i) + " = " + r.generators[i].to_string() + "\n";
    }
    j["tables"] = tables;
  }
  emit(as_json, j, text);
  if (invalid || !r.m.missing.empty() || r.generators.empty()) return kFail;
  return r.partition.orbits.verified ? kPass : kOther;
}

int cmd_member(const std::string& file, const std::string& expr, std::size_t depth, std::size_t max_len,
               std::size_t max_states, bool as_json) {
  const auto p = load_presentation(file);
  const auto g = evaluate(expr, p);
  const auto gs = generating_set(p.groupoid, p.basic, depth);
  const auto r = bounded_membership(g, gs.generators, max_len, max_states);
  json j{{"element", g.to_string()},
         {"generators", gs.generators.size()},
         {"verdict", r.found ? "member" : "inconclusive"},
         {"explored", r.explored},
         {"complete_to_length", r.reached_length}};
  std::string text = "element " + g.to_string() + "\n" + std::to_string(gs.generators.size()) + " generators\n";
  if (r.found) {
    j["word"] = word_text(r.word);
    text += "member: " + word_text(r.word) + "\n";
  } else {
    text += "inconclusive: searched " + std::to_string(r.explored) + " elements, complete to length " +
            std::to_string(r.reached_length) + "\n";
  }
  emit(as_json, j, text);
  return r.found ? kPass : kOther;
}

int cmd_expansive(const std::string& file, const std::string& cover_name, std::size_t n, std::size_t m,
                  const std::string& ball_root, std::size_t radius, bool dot, bool as_json) {
  const auto p = load_presentation(file);
  const auto cover = p.cover(cover_name);
  if (!ball_root.empty()) {
    const auto ball = cayley_ball(cover, p.groupoid->space()->parse(ball_root), radius);
    if (dot) {
      std::cout << to_dot(ball, *p.groupoid->space());
      return kPass;
    }
    json j{{"root", ball_root}, {"radius", radius}, {"vertices", ball.vertices.size()}, {"edges", ball.edges.size()}};
    emit(as_json, j,
         "ball of radius " + std::to_string(radius) + " at " + ball_root + ": " + std::to_string(ball.vertices.size()) +
             " vertices, " + std::to_string(ball.edges.size()) + " edges\n");
    return kPass;
  }
  const auto r = separation_check(cover, n, m);
  json j{{"verdict", to_string(r.verdict)},
         {"n", n},
         {"m", m},
         {"products", r.products},
         {"cells", r.cells},
         {"certificate", r.certificate}};
  std::string text = to_string(r.verdict) + " at (" + std::to_string(n) + "," + std::to_string(m) + "): " +
                     std::to_string(r.products) + " products, " + std::to_string(r.cells) + " cells\n";
  if (!r.certificate.empty()) text += r.certificate + "\n";
  emit(as_json, j, text);
  return r.verdict == Verdict::expansive ? kPass : r.verdict == Verdict::refuted ? kFail : kOther;
}

int cmd_h0(const std::string& file, std::size_t depth, std::size_t bound, const std::vector<std::string>& rep,
           bool as_json) {
  const auto p = load_presentation(file);
  const auto h = h0_z2(p.groupoid, p.basic, depth, bound);
  json j{{"depth", depth},
         {"product_bound", bound},
         {"cells", h.cells().size()},
         {"relations", h.relations()},
         {"group", h.describe()}};
  std::string text = "H0 approximation at depth " + std::to_string(depth) + ", product bound " + std::to_string(bound) +
                     ": " + h.describe() + " (" + std::to_string(h.relations()) + " relations)\n";
  if (!rep.empty()) {
    const auto u = make_clopen(p.groupoid->space(), rep);
    const auto t = to_quotient_rep(p.groupoid, p.basic, u);
    j["class_zero"] = h.is_zero(u);
    j["representative"] = t.to_string();
    text += "class of " + u.to_string() + (h.is_zero(u) ? " is zero" : " is nonzero") + "; represented by " +
            t.to_string() + "\n";
  }
  emit(as_json, j, text);
  return kPass;
}

int cmd_qc(const std::string& action, const std::string& file, const std::string& box, double radius, bool as_json) {
  const auto p = load_presentation(file);
  if (!p.quasicrystal) throw Error(file + ": no quasicrystal section");
  auto q = *p.quasicrystal;
  if (!box.empty()) {
    const auto comma = box.find(',');
    if (comma == std::string::npos) throw Error("--box expects a,b");
    q.lo = std::stod(box.substr(0, comma));
    q.hi = std::stod(box.substr(comma + 1));
  }
  const auto ps = cut_and_project(q.params, q.lo, q.hi);
  if (action == "generate") {
    std::cout << to_csv(ps);
    return kPass;
  }
  if (action == "check") {
    const double R = radius > 0 ? radius : 1.62;
    const auto d = check_delaunay(ps, R, 0.99, 2.0);
    const auto rips = rips_h1_z2(ps, R);
    const auto rep = repetitivity_radius(ps, R);
    json j{{"points", ps.points.size()},
           {"delaunay", d.ok},
           {"counterexample", d.counterexample},
           {"margin", d.margin},
           {"rips_components", rips.components},
           {"rips_beta1", rips.beta1},
           {"repetitivity", rep.D ? json(*rep.D) : json(nullptr)},
           {"repetitivity_note", rep.note},
           {"periodic", ps.period.has_value()}};
    std::string text = std::to_string(ps.points.size()) + " points; Delaunay " + (d.ok ? "ok" : d.counterexample) +
                       "\nRips at R=" + std::to_string(R) + ": components " + std::to_string(rips.components) +
                       ", beta1 " + std::to_string(rips.beta1) + "\nrepetitivity " +
                       (rep.D ? std::to_string(*rep.D) : "unverified: " + rep.note) + "\n";
    emit(as_json, j, text);
    return d.ok ? (rep.D ? kPass : kOther) : kFail;
  }
  if (action == "patches") {
    const double R = radius > 0 ? radius : 1.1;
    const auto c = local_complexity(ps, R);
    json classes = json::array();
    std::string text = std::to_string(c.classes.size()) + " patch classes at R=" + std::to_string(R) + "\n";
    for (const auto& k : c.classes) {
      json offs = json::array();
      std::string row;
      for (const auto& o : k.offsets) {
        offs.push_back(ps.dimension == 1 ? json(o[0].to_string()) : json({o[0].to_string(), o[1].to_string()}));
        row += (row.empty() ? "" : " ") + o[0].to_string();
      }
      classes.push_back({{"offsets", offs}, {"occurrences", k.occurrences}});
      text += "  [" + row + "] x" + std::to_string(k.occurrences) + "\n";
    }
    emit(as_json, json{{"radius", R}, {"classes", classes}}, text);
    return kPass;
  }
  if (action == "gens") {
    const auto sym = symbolic_presentation(ps);
    const auto gs = generating_set(sym.groupoid, sym.basic, 3);
    std::size_t invalid = 0;
    for (const auto& m : gs.m.multisections)
      if (m.validate()) ++invalid;
    json j{{"space", sym.groupoid->space()->describe()},
           {"basic", sym.basic.size()},
           {"generators", gs.generators.size()},
           {"invalid_multisections", invalid}};
    emit(as_json, j,
         sym.groupoid->space()->describe() + "\n" + std::to_string(gs.generators.size()) + " generators, " +
             std::to_string(invalid) + " invalid multisections\n");
    return invalid == 0 && !gs.generators.empty() ? kPass : kFail;
  }
  throw Error("unknown qc action '" + action + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Topological full groups of étale groupoids over sequence spaces"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable output");

  std::string file;
  auto* algebra = app.add_subcommand("algebra", "evaluate element expressions");
  std::vector<std::string> exprs;
  algebra->add_option("--pres", file, "presentation file")->required();
  algebra->add_option("exprs", exprs, "expressions such as g*h, g^-1, [g,h], tau(F), g == h")->required();

  auto* validate = app.add_subcommand("validate", "load and validate a presentation");
  validate->add_option("file", file)->required();

  std::size_t depth = 1;
  bool list = false;
  auto* gens = app.add_subcommand("gens", "generating set of A(G)");
  gens->add_option("--pres", file)->required();
  gens->add_option("--depth", depth, "cylinder depth of the partition");
  gens->add_flag("--list", list, "print every generator");

  std::string expr;
  std::size_t max_len = 20, max_states = 200000;
  auto* member = app.add_subcommand("member", "bounded membership search in the generating set");
  member->add_option("--pres", file)->required();
  member->add_option("--element", expr)->required();
  member->add_option("--depth", depth);
  member->add_option("--max-len", max_len);
  member->add_option("--max-states", max_states);

  std::string cover = "basic", root;
  std::size_t n = 3, m = 3, radius = 2;
  bool dot = false;
  auto* expansive = app.add_subcommand("expansive", "separation check and Cayley balls");
  expansive->add_option("--pres", file)->required();
  expansive->add_option("--cover", cover);
  expansive->add_option("-n", n, "cylinder depth");
  expansive->add_option("-m", m, "product length");
  expansive->add_option("--ball", root, "root cylinder of a Cayley ball");
  expansive->add_option("--radius", radius);
  expansive->add_flag("--dot", dot, "print the ball as DOT");

  std::size_t bound = 3;
  std::vector<std::string> rep;
  auto* h0 = app.add_subcommand("h0", "H0(G; Z/2) approximation");
  h0->add_option("--pres", file)->required();
  h0->add_option("--depth", depth);
  h0->add_option("--bound", bound, "product bound");
  h0->add_option("--rep", rep, "words of a clopen set U; prints tau_F for s(F) = U");

  std::string action, box;
  double qradius = 0;
  auto* qc = app.add_subcommand("qc", "quasicrystal samples");
  qc->add_option("action", action, "generate | check | patches | gens")->required();
  qc->add_option("--params", file)->required();
  qc->add_option("--box", box, "a,b");
  qc->add_option("--radius", qradius);

  std::string dir = data_dir();
  auto* verify = app.add_subcommand("verify", "replay the bundled checks");
  verify->add_option("--data", dir, "directory of presentation files");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kPass : kOther;
  }

  try {
    if (*algebra) return cmd_algebra(file, exprs, as_json);
    if (*validate) return cmd_validate(file, as_json);
    if (*gens) return cmd_gens(file, depth, list, as_json);
    if (*member) return cmd_member(file, expr, depth, max_len, max_states, as_json);
    if (*expansive) return cmd_expansive(file, cover, n, m, root, radius, dot, as_json);
    if (*h0) return cmd_h0(file, depth, bound, rep, as_json);
    if (*qc) return cmd_qc(action, file, box, qradius, as_json);
    if (*verify) {
      const auto r = verify_bundled(dir);
      std::cout << (as_json ? report_json(r) + "\n" : report_text(r));
      return exit_code(r.overall());
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kOther;
  }
  return kOther;
}
