#include "tfg/bisection.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace tfg {

namespace {

bool dom_less(const Arrow& a, const Arrow& b) { return a.dom < b.dom; }

void check_antichain(std::vector<Word> words, const char* what) {
  std::sort(words.begin(), words.end());
  for (std::size_t i = 1; i < words.size(); ++i)
    if (is_prefix(words[i - 1], words[i]))
      throw Error(std::string("not a bisection: ") + what + " words overlap");
}

void validate(const Groupoid& g, const std::vector<Arrow>& arrows) {
  const auto& space = *g.space();
  const bool automata = space.kind() == SequenceSpace::Kind::full_shift;
  std::vector<Word> doms, rans;
  for (const auto& a : arrows) {
    if (!space.valid(a.dom) || !space.valid(a.ran)) throw Error("arrow word is not valid in this space");
    if (a.germ >= std::max<std::size_t>(g.germs().size(), 1)) throw Error("arrow refers to an unknown germ");
    if (!automata && a.germ != kIdentity) throw Error("non-identity germs need a full shift");
    if (!space.tail_compatible(a.dom, a.ran)) throw Error("arrow joins cylinders with incompatible tails");
    doms.push_back(a.dom);
    rans.push_back(a.ran);
  }
  check_antichain(std::move(doms), "domain");
  check_antichain(std::move(rans), "range");
}

// Merge complete sibling families that split a single arrow. With any_state
// the merged label may be a fresh state; otherwise only declared states (and
// the identity) are used.
void merge_families(const Groupoid& g, std::vector<Arrow>& arrows, bool any_state) {
  const auto& space = *g.space();
  const bool automata = space.kind() == SequenceSpace::Kind::full_shift;
  auto& germs = g.germs();
  for (;;) {
    std::map<Word, std::vector<std::size_t>> families;
    for (std::size_t i = 0; i < arrows.size(); ++i)
      if (!arrows[i].dom.empty() && !arrows[i].ran.empty())
        families[arrows[i].dom.substr(0, arrows[i].dom.size() - 1)].push_back(i);
    std::vector<bool> drop(arrows.size(), false);
    std::vector<Arrow> merged;
    for (const auto& [parent, members] : families) {
      const auto& succ = space.successors(parent);
      if (members.size() != succ.size()) continue;
      const Arrow& first = arrows[members[0]];
      const Word u = first.ran.substr(0, first.ran.size() - 1);
      bool ok = true;
      for (auto i : members) {
        const Arrow& a = arrows[i];
        if (a.ran.size() != first.ran.size() || !is_prefix(u, a.ran) || (g.action() && a.tag != first.tag)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      StateId label = kIdentity;
      if (!automata) {
        if (!space.tail_compatible(parent, u)) continue;
        for (auto i : members)
          if (arrows[i].germ != kIdentity || arrows[i].ran.back() != arrows[i].dom.back()) ok = false;
        if (!ok) continue;
      } else {
        const std::size_t k = germs.alphabet_size();
        std::vector<Letter> outs(k);
        std::vector<StateId> nexts(k);
        for (auto i : members) {
          outs[arrows[i].dom.back()] = arrows[i].ran.back();
          nexts[arrows[i].dom.back()] = arrows[i].germ;
        }
        if (any_state) {
          label = germs.state_with(outs, nexts);
        } else {
          auto base = germs.find_base(outs, nexts);
          if (!base) continue;
          label = *base;
        }
      }
      for (auto i : members) drop[i] = true;
      merged.push_back(Arrow{parent, label, u, first.tag});
    }
    if (merged.empty()) break;
    std::vector<Arrow> next;
    for (std::size_t i = 0; i < arrows.size(); ++i)
      if (!drop[i]) next.push_back(std::move(arrows[i]));
    for (auto& m : merged) next.push_back(std::move(m));
    arrows = std::move(next);
  }
  std::sort(arrows.begin(), arrows.end(), dom_less);
}

Arrow child(const Groupoid& g, const Arrow& a, Letter x) {
  auto& germs = g.germs();
  return Arrow{a.dom + x, germs.next(a.germ, x), a.ran + germs.output(a.germ, x), a.tag};
}

Arrow restrict_arrow(const Groupoid& g, const Arrow& a, const Word& w) {
  auto& germs = g.germs();
  const Word s = w.substr(a.dom.size());
  return Arrow{w, germs.residual(a.germ, s), a.ran + germs.apply(a.germ, s), a.tag};
}

void compose_into(const Groupoid& g, const Arrow& a1, const Arrow& a2, std::vector<Arrow>& out) {
  auto& germs = g.germs();
  if (is_prefix(a1.dom, a2.ran)) {
    const Word s = a2.ran.substr(a1.dom.size());
    out.push_back(Arrow{a2.dom, germs.compose(germs.residual(a1.germ, s), a2.germ),
                        a1.ran + germs.apply(a1.germ, s), tag_concat(a1.tag, a2.tag)});
    return;
  }
  for (Letter x : g.space()->successors(a2.dom)) {
    Arrow c = child(g, a2, x);
    if (comparable(a1.dom, c.ran)) compose_into(g, a1, c, out);
  }
}

StateId parse_germ(const Groupoid& g, const std::string& name) {
  auto& germs = g.germs();
  if (auto s = germs.lookup(name)) return *s;
  auto caret = name.rfind('^');
  if (caret != std::string::npos && caret > 0) {
    auto base = germs.lookup(name.substr(0, caret));
    if (base) {
      long n = 0;
      try {
        std::size_t used = 0;
        n = std::stol(name.substr(caret + 1), &used);
        if (used != name.size() - caret - 1) throw Error("");
      } catch (...) {
        throw Error("unknown germ '" + name + "'");
      }
      StateId unit = n < 0 ? germs.inverse(*base) : *base;
      StateId acc = kIdentity;
      for (long i = 0; i < std::labs(n); ++i) acc = germs.compose(unit, acc);
      return acc;
    }
  }
  throw Error("unknown germ '" + name + "'");
}

std::string word_text(const SequenceSpace& space, const Word& w) {
  return w.empty() ? std::string("ε") : space.format(w);
}

// Agreement of two local maps on the cylinder w, split into the sub-cylinders
// where their germs coincide and where they differ.
class Agreement {
 public:
  explicit Agreement(const Groupoid& g) : g_(g), germs_(g.germs()) {}

  void split(const Word& w, const Bisection::Local& a, const Bisection::Local& b, std::vector<Word>& agree,
             std::vector<Word>& differ) {
    if ((g_.action() && a.tag != b.tag) || a.ran != b.ran) {
      differ.push_back(w);
      return;
    }
    descend(w, a.germ, b.germ, agree, differ);
  }

 private:
  void descend(const Word& w, StateId p, StateId q, std::vector<Word>& agree, std::vector<Word>& differ) {
    if (p == q) {
      agree.push_back(w);
      return;
    }
    if (!productive(p, q)) {
      differ.push_back(w);
      return;
    }
    if (!path_.insert({p, q}).second)
      throw Error("germ sets meet in a set that is not compact open");
    for (std::size_t i = 0; i < germs_.alphabet_size(); ++i) {
      const Letter x = static_cast<Letter>(i);
      if (germs_.output(p, x) != germs_.output(q, x))
        differ.push_back(w + x);
      else
        descend(w + x, germs_.next(p, x), germs_.next(q, x), agree, differ);
    }
    path_.erase({p, q});
  }

  // can the two states agree on some cylinder?
  bool productive(StateId p, StateId q) {
    auto key = std::make_pair(p, q);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::set<std::pair<StateId, StateId>> seen{key};
    std::vector<std::pair<StateId, StateId>> stack{key};
    bool found = false;
    while (!stack.empty() && !found) {
      auto [s, t] = stack.back();
      stack.pop_back();
      for (std::size_t i = 0; i < germs_.alphabet_size(); ++i) {
        const Letter x = static_cast<Letter>(i);
        if (germs_.output(s, x) != germs_.output(t, x)) continue;
        std::pair<StateId, StateId> n{germs_.next(s, x), germs_.next(t, x)};
        if (n.first == n.second) {
          found = true;
          break;
        }
        if (seen.insert(n).second) stack.push_back(n);
      }
    }
    memo_[key] = found;
    return found;
  }

  const Groupoid& g_;
  GermAlgebra& germs_;
  std::set<std::pair<StateId, StateId>> path_;
  std::map<std::pair<StateId, StateId>, bool> memo_;
};

template <class Cell>
void overlay(const Bisection& a, const Bisection& b, const Word& w, Cell&& cell) {
  const auto ca = a.coverage(w);
  const auto cb = b.coverage(w);
  if (ca == Bisection::Coverage::outside && cb == Bisection::Coverage::outside) return;
  if (ca == Bisection::Coverage::partial || cb == Bisection::Coverage::partial) {
    for (Letter x : a.groupoid()->space()->successors(w)) overlay(a, b, w + x, cell);
    return;
  }
  cell(w, a.at(w), b.at(w));
}

}  // namespace

Bisection::Bisection(GroupoidPtr groupoid, std::vector<Arrow> arrows)
    : groupoid_(std::move(groupoid)), arrows_(std::move(arrows)) {
  if (!groupoid_) throw Error("bisection without groupoid");
  validate(*groupoid_, arrows_);
  if (!groupoid_->action())
    for (auto& a : arrows_) a.tag.clear();
  merge_families(*groupoid_, arrows_, false);
}

Bisection Bisection::empty(GroupoidPtr groupoid) { return Bisection(std::move(groupoid), {}); }

Bisection Bisection::identity(GroupoidPtr groupoid, const ClopenSet& set) {
  std::vector<Arrow> arrows;
  for (const auto& w : set.words()) arrows.push_back(Arrow{w, kIdentity, w, {}});
  return Bisection(std::move(groupoid), std::move(arrows));
}

Bisection Bisection::literal(GroupoidPtr groupoid, const std::vector<std::string>& dom,
                             const std::vector<std::string>& germ, const std::vector<std::string>& ran) {
  if (dom.size() != germ.size() || dom.size() != ran.size())
    throw Error("table rows have different lengths");
  std::vector<Arrow> arrows;
  const auto& space = *groupoid->space();
  for (std::size_t i = 0; i < dom.size(); ++i) {
    Arrow a{space.parse(dom[i]), parse_germ(*groupoid, germ[i]), space.parse(ran[i]), {}};
    a.tag = literal_tag(a.dom, a.germ, a.ran);
    arrows.push_back(std::move(a));
  }
  return Bisection(std::move(groupoid), std::move(arrows));
}

void Bisection::check_same(const Bisection& other) const {
  if (groupoid_.get() != other.groupoid_.get()) throw Error("bisections belong to different groupoids");
}

ClopenSet Bisection::source() const {
  std::vector<Word> w;
  for (const auto& a : arrows_) w.push_back(a.dom);
  return ClopenSet(groupoid_->space(), std::move(w));
}

ClopenSet Bisection::range() const {
  std::vector<Word> w;
  for (const auto& a : arrows_) w.push_back(a.ran);
  return ClopenSet(groupoid_->space(), std::move(w));
}

Bisection::Coverage Bisection::coverage(const Word& w) const {
  auto it = std::upper_bound(arrows_.begin(), arrows_.end(), w,
                             [](const Word& x, const Arrow& a) { return x < a.dom; });
  if (it != arrows_.begin() && is_prefix(std::prev(it)->dom, w)) return Coverage::inside;
  auto lo = std::lower_bound(arrows_.begin(), arrows_.end(), w,
                             [](const Arrow& a, const Word& x) { return a.dom < x; });
  if (lo != arrows_.end() && is_prefix(w, lo->dom)) return Coverage::partial;
  return Coverage::outside;
}

std::optional<Bisection::Local> Bisection::at(const Word& w) const {
  auto it = std::upper_bound(arrows_.begin(), arrows_.end(), w,
                             [](const Word& x, const Arrow& a) { return x < a.dom; });
  if (it == arrows_.begin() || !is_prefix(std::prev(it)->dom, w)) return std::nullopt;
  Arrow r = restrict_arrow(*groupoid_, *std::prev(it), w);
  return Local{std::move(r.ran), r.germ, std::move(r.tag)};
}

Bisection Bisection::inverse() const {
  std::vector<Arrow> out;
  auto& germs = groupoid_->germs();
  for (const auto& a : arrows_) out.push_back(Arrow{a.ran, germs.inverse(a.germ), a.dom, tag_inverse(a.tag)});
  return Bisection(groupoid_, std::move(out));
}

Bisection Bisection::restrict(const ClopenSet& set) const {
  if (set.space().get() != groupoid_->space().get()) throw Error("clopen set lives in a different space");
  std::vector<Arrow> out;
  for (const auto& a : arrows_) {
    if (set.contains_cylinder(a.dom)) {
      out.push_back(a);
      continue;
    }
    auto lo = std::lower_bound(set.words().begin(), set.words().end(), a.dom);
    for (; lo != set.words().end() && is_prefix(a.dom, *lo); ++lo) out.push_back(restrict_arrow(*groupoid_, a, *lo));
  }
  return Bisection(groupoid_, std::move(out));
}

Bisection compose(const Bisection& b1, const Bisection& b2) {
  if (b1.groupoid().get() != b2.groupoid().get()) throw Error("bisections belong to different groupoids");
  const Groupoid& g = *b1.groupoid();
  const auto& first = b1.arrows();
  std::vector<Arrow> out;
  for (const auto& a2 : b2.arrows()) {
    // arrow of b1 whose domain contains the cylinder a2.ran
    auto it = std::upper_bound(first.begin(), first.end(), a2.ran,
                               [](const Word& x, const Arrow& a) { return x < a.dom; });
    if (it != first.begin() && is_prefix(std::prev(it)->dom, a2.ran)) {
      compose_into(g, *std::prev(it), a2, out);
      continue;
    }
    auto lo = std::lower_bound(first.begin(), first.end(), a2.ran,
                               [](const Arrow& a, const Word& x) { return a.dom < x; });
    for (; lo != first.end() && is_prefix(a2.ran, lo->dom); ++lo) compose_into(g, *lo, a2, out);
  }
  return Bisection(b1.groupoid(), std::move(out));
}

Bisection Bisection::intersected(const Bisection& other) const {
  check_same(other);
  Agreement agreement(*groupoid_);
  std::vector<Arrow> out;
  overlay(*this, other, Word(), [&](const Word& w, const std::optional<Local>& a, const std::optional<Local>& b) {
    if (!a || !b) return;
    std::vector<Word> agree, differ;
    agreement.split(w, *a, *b, agree, differ);
    for (const auto& c : agree) {
      auto l = this->at(c);
      out.push_back(Arrow{c, l->germ, l->ran, l->tag});
    }
  });
  return Bisection(groupoid_, std::move(out));
}

Bisection Bisection::minus(const Bisection& other) const {
  check_same(other);
  Agreement agreement(*groupoid_);
  std::vector<Arrow> out;
  overlay(*this, other, Word(), [&](const Word& w, const std::optional<Local>& a, const std::optional<Local>& b) {
    if (!a) return;
    if (!b) {
      out.push_back(Arrow{w, a->germ, a->ran, a->tag});
      return;
    }
    std::vector<Word> agree, differ;
    agreement.split(w, *a, *b, agree, differ);
    for (const auto& c : differ) {
      auto l = this->at(c);
      out.push_back(Arrow{c, l->germ, l->ran, l->tag});
    }
  });
  return Bisection(groupoid_, std::move(out));
}

Bisection Bisection::united(const Bisection& other) const {
  check_same(other);
  std::vector<Arrow> out = arrows_;
  const Bisection extra = other.minus(*this);
  for (const auto& a : extra.arrows()) out.push_back(a);
  return Bisection(groupoid_, std::move(out));
}

bool Bisection::equals(const Bisection& other) const {
  check_same(other);
  bool same = true;
  overlay(*this, other, Word(), [&](const Word&, const std::optional<Local>& a, const std::optional<Local>& b) {
    if (!same) return;
    if (!a || !b || a->ran != b->ran || a->germ != b->germ || (groupoid_->action() && a->tag != b->tag))
      same = false;
  });
  return same;
}

bool Bisection::is_identity() const {
  return std::all_of(arrows_.begin(), arrows_.end(),
                     [](const Arrow& a) { return a.dom == a.ran && a.germ == kIdentity && a.tag.empty(); });
}

std::string Bisection::key() const {
  std::vector<Arrow> normal = arrows_;
  merge_families(*groupoid_, normal, true);
  std::string out;
  auto put_word = [&](const Word& w) {
    for (Letter x : w) out += std::to_string(x) + ',';
    out += '/';
  };
  for (const auto& a : normal) {
    put_word(a.dom);
    out += std::to_string(a.germ) + '/';
    put_word(a.ran);
    if (groupoid_->action())
      for (auto t : a.tag) out += std::to_string(t) + ',';
    out += ';';
  }
  return out;
}

std::string Bisection::to_string() const {
  if (arrows_.empty()) return "()";
  const auto& space = *groupoid_->space();
  std::ostringstream dom, germ, ran;
  for (std::size_t i = 0; i < arrows_.size(); ++i) {
    const char* sep = i ? " " : "";
    dom << sep << word_text(space, arrows_[i].dom);
    germ << sep << groupoid_->germs().name(arrows_[i].germ);
    ran << sep << word_text(space, arrows_[i].ran);
  }
  return "(" + dom.str() + " | " + germ.str() + " | " + ran.str() + ")";
}

}  // namespace tfg
