#include "tfg/presentation.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "tfg/expr.hpp"

namespace tfg {

using nlohmann::json;

namespace {

// Runs f, prefixing any error with the location inside the document.
template <class F>
auto at(const std::string& where, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw Error(where + ": " + e.what());
  } catch (const Error& e) {
    throw Error(where + ": " + e.what());
  }
}

std::vector<std::string> strings(const json& j) { return j.get<std::vector<std::string>>(); }

ZPhi zphi(const json& j) {
  if (j.is_number_integer()) return ZPhi{j.get<std::int64_t>(), 0};
  const auto v = j.get<std::vector<std::int64_t>>();
  if (v.size() != 2) throw Error("Z[φ] values are [a, b] meaning a + bφ");
  return ZPhi{v[0], v[1]};
}

SpacePtr parse_space(const json& j) {
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "full_shift") return SequenceSpace::full_shift(strings(j.at("alphabet")));
  if (kind == "sft") {
    std::vector<std::pair<std::string, std::string>> allowed;
    for (const auto& e : j.at("allowed")) allowed.emplace_back(e.at(0).get<std::string>(), e.at(1).get<std::string>());
    return SequenceSpace::sft(strings(j.at("alphabet")), allowed);
  }
  if (kind == "bratteli") {
    std::vector<std::vector<std::string>> vertices;
    for (const auto& level : j.at("vertices")) vertices.push_back(strings(level));
    std::vector<std::vector<SequenceSpace::BratteliEdge>> edges;
    const auto& el = j.at("edges");
    for (std::size_t n = 0; n < el.size(); ++n) {
      auto index = [&](const json& v, std::size_t level) -> std::size_t {
        if (v.is_number_unsigned()) return v.get<std::size_t>();
        if (level >= vertices.size()) throw Error("edge level " + std::to_string(n + 1) + " has no vertex level");
        const auto name = v.get<std::string>();
        const auto& names = vertices[level];
        for (std::size_t i = 0; i < names.size(); ++i)
          if (names[i] == name) return i;
        throw Error("unknown vertex '" + name + "'");
      };
      std::vector<SequenceSpace::BratteliEdge> row;
      for (const auto& e : el[n])
        row.push_back({e.at("name").get<std::string>(), index(e.at("src"), n), index(e.at("dst"), n + 1)});
      edges.push_back(std::move(row));
    }
    return SequenceSpace::bratteli(std::move(vertices), std::move(edges));
  }
  throw Error("unknown space kind '" + kind + "'");
}

AutomatonSpec parse_automaton(const json& j) {
  AutomatonSpec a;
  a.name = j.at("name").get<std::string>();
  for (const auto& s : j.at("states")) {
    AutomatonSpec::State st;
    st.name = s.at("name").get<std::string>();
    for (const auto& t : s.at("transitions"))
      st.transitions.push_back(
          {t.at("on").get<std::string>(), t.at("out").get<std::string>(), t.at("to").get<std::string>()});
    a.states.push_back(std::move(st));
  }
  return a;
}

Bisection parse_table(const GroupoidPtr& g, const json& j) {
  const auto dom = strings(j.at("dom"));
  const auto ran = strings(j.at("ran"));
  std::vector<std::string> germ(dom.size(), "id");
  if (j.contains("germ")) germ = strings(j.at("germ"));
  return Bisection::literal(g, dom, germ, ran);
}

QuasicrystalSpec parse_quasicrystal(const json& j) {
  QuasicrystalSpec q;
  const auto kind = j.value("kind", std::string("fibonacci"));
  if (kind == "fibonacci")
    q.params.kind = CutProjectParams::Kind::fibonacci;
  else if (kind == "lattice")
    q.params.kind = CutProjectParams::Kind::lattice;
  else if (kind == "fibonacci_grid")
    q.params.kind = CutProjectParams::Kind::fibonacci_grid;
  else
    throw Error("unknown cut-and-project kind '" + kind + "'");
  if (j.contains("window_start")) q.params.window_start = zphi(j.at("window_start"));
  if (j.contains("window_length")) q.params.window_length = zphi(j.at("window_length"));
  if (j.contains("spacing")) q.params.spacing = zphi(j.at("spacing"));
  const auto box = j.at("box").get<std::vector<double>>();
  if (box.size() != 2 || !(box[0] < box[1])) throw Error("box must be [lo, hi] with lo < hi");
  q.lo = box[0];
  q.hi = box[1];
  if (j.contains("rule")) {
    const auto& r = j.at("rule");
    q.rule = LocalRuleSpec{r.at("radius").get<double>(), r.at("pattern").get<std::string>(),
                           r.at("cycle").get<std::size_t>()};
  }
  return q;
}

template <class T>
const T* find_named(const std::vector<std::pair<std::string, T>>& v, const std::string& name) {
  for (const auto& [n, x] : v)
    if (n == name) return &x;
  return nullptr;
}

}  // namespace

const Bisection* Presentation::bisection(const std::string& name) const {
  for (const auto& b : bisections)
    if (b.name == name) return &b.bisection;
  return nullptr;
}

const FullGroupElement* Presentation::element(const std::string& name) const { return find_named(elements, name); }

const Multisection* Presentation::multisection(const std::string& name) const {
  return find_named(multisections, name);
}

LabeledCover Presentation::cover(const std::string& name) const {
  if (name == "basic") return symmetric_cover(groupoid, basic);
  const auto* names = find_named(covers, name);
  if (!names) throw Error("unknown cover '" + name + "'");
  std::vector<NamedBisection> els;
  for (const auto& n : *names) els.push_back(NamedBisection{n, *bisection(n)});
  return symmetric_cover(groupoid, els);
}

Presentation parse_presentation(const std::string& text, const std::string& origin) {
  return at(origin, [&] {
    Presentation p;
    p.origin = origin;
    const json doc = at("json", [&] { return json::parse(text); });
    const int version = at("version", [&] { return doc.at("version").get<int>(); });
    if (version != kSchemaVersion)
      throw Error("version: unsupported schema version " + std::to_string(version));
    p.name = doc.value("name", std::string());
    const auto semantics = at("germ_semantics", [&] {
      const auto s = doc.value("germ_semantics", std::string("germs"));
      if (s == "germs") return GermSemantics::germs;
      if (s == "action") return GermSemantics::action;
      throw Error("expected \"germs\" or \"action\"");
    });
    const auto bound = doc.value("state_bound", std::size_t{64});

    if (doc.contains("quasicrystal")) {
      p.quasicrystal = at("quasicrystal", [&] { return parse_quasicrystal(doc.at("quasicrystal")); });
      if (!doc.contains("space")) {
        at("quasicrystal", [&] {
          const auto& q = *p.quasicrystal;
          if (q.params.kind == CutProjectParams::Kind::fibonacci_grid) return 0;
          auto sym = symbolic_presentation(cut_and_project(q.params, q.lo, q.hi));
          p.groupoid = sym.groupoid;
          p.bisections = sym.basic;
          p.basic = sym.basic;
          return 0;
        });
      }
    }
    if (doc.contains("space")) {
      const auto space = at("space", [&] { return parse_space(doc.at("space")); });
      p.groupoid = make_groupoid(space, semantics, bound);
    }
    if (!p.groupoid) {
      if (p.quasicrystal) return p;  // 2D statistics only
      throw Error("space: missing");
    }

    if (doc.contains("automata")) {
      const auto& list = doc.at("automata");
      for (std::size_t i = 0; i < list.size(); ++i)
        at("automata[" + std::to_string(i) + "]", [&] {
          p.groupoid->germs().add_automaton(parse_automaton(list[i]), *p.groupoid->space());
          return 0;
        });
    }
    if (doc.contains("bisections")) {
      const auto& list = doc.at("bisections");
      for (std::size_t i = 0; i < list.size(); ++i) {
        const auto where = "bisections[" + std::to_string(i) + "]";
        at(where, [&] {
          const auto name = list[i].at("name").get<std::string>();
          if (p.bisection(name)) throw Error("duplicate name '" + name + "'");
          p.bisections.push_back(NamedBisection{name, at(name, [&] { return parse_table(p.groupoid, list[i]); })});
          return 0;
        });
      }
    }
    if (doc.contains("basic")) {
      p.basic.clear();
      const auto& list = doc.at("basic");
      for (std::size_t i = 0; i < list.size(); ++i)
        at("basic[" + std::to_string(i) + "]", [&] {
          const auto name = list[i].get<std::string>();
          const auto* b = p.bisection(name);
          if (!b) throw Error("unknown bisection '" + name + "'");
          p.basic.push_back(NamedBisection{name, *b});
          return 0;
        });
    }
    if (doc.contains("elements")) {
      const auto& list = doc.at("elements");
      for (std::size_t i = 0; i < list.size(); ++i)
        at("elements[" + std::to_string(i) + "]", [&] {
          const auto& e = list[i];
          const auto name = e.at("name").get<std::string>();
          if (p.element(name)) throw Error("duplicate name '" + name + "'");
          auto value = at(name, [&] {
            if (e.contains("expr")) return evaluate(e.at("expr").get<std::string>(), p);
            return FullGroupElement(parse_table(p.groupoid, e.at("table")));
          });
          p.elements.emplace_back(name, std::move(value));
          return 0;
        });
    }
    if (doc.contains("multisections")) {
      const auto& list = doc.at("multisections");
      for (std::size_t i = 0; i < list.size(); ++i)
        at("multisections[" + std::to_string(i) + "]", [&] {
          const auto& e = list[i];
          const auto name = e.at("name").get<std::string>();
          auto lookup = [&](const json& n) {
            const auto s = n.get<std::string>();
            const auto* b = p.bisection(s);
            if (!b) throw Error("unknown bisection '" + s + "'");
            return *b;
          };
          Multisection m;
          if (e.contains("spokes")) {
            std::vector<Bisection> spokes;
            for (const auto& s : e.at("spokes")) spokes.push_back(lookup(s));
            m = from_spokes(spokes, make_clopen(p.groupoid->space(), strings(e.at("base"))));
          } else {
            std::vector<std::vector<Bisection>> grid;
            for (const auto& row : e.at("grid")) {
              grid.emplace_back();
              for (const auto& s : row) grid.back().push_back(lookup(s));
            }
            m = Multisection(p.groupoid, std::move(grid));
          }
          if (auto why = m.validate()) throw Error(name + ": " + *why);
          p.multisections.emplace_back(name, std::move(m));
          return 0;
        });
    }
    if (doc.contains("covers")) {
      const auto& list = doc.at("covers");
      for (std::size_t i = 0; i < list.size(); ++i)
        at("covers[" + std::to_string(i) + "]", [&] {
          const auto name = list[i].at("name").get<std::string>();
          const auto els = strings(list[i].at("elements"));
          for (const auto& n : els)
            if (!p.bisection(n)) throw Error("unknown bisection '" + n + "'");
          p.covers.emplace_back(name, els);
          return 0;
        });
    }
    if (doc.contains("checks")) {
      for (const auto& c : doc.at("checks"))
        p.checks.push_back(StoredCheck{c.at("kind").get<std::string>(), strings(c.at("args")),
                                       c.value("note", std::string())});
    }
    return p;
  });
}

Presentation load_presentation(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(path + ": cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_presentation(ss.str(), path);
}

std::string data_dir() {
#ifdef TFG_DATA_DIR
  return TFG_DATA_DIR;
#else
  return "data";
#endif
}

}  // namespace tfg
