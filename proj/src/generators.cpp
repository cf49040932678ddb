#include "tfg/generators.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace tfg {

Partition::Partition(std::vector<ClopenSet> parts) : parts_(std::move(parts)) {}

Partition Partition::cylinders(const SpacePtr& space, std::size_t depth) {
  std::vector<ClopenSet> parts;
  for (auto& w : space->words_of_length(depth)) parts.push_back(ClopenSet::cylinder(space, std::move(w)));
  return Partition(std::move(parts));
}

int Partition::part_of(const Word& w) const {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i].contains_cylinder(w)) return static_cast<int>(i);
    if (parts_[i].meets_cylinder(w)) return -1;
  }
  return -1;
}

namespace {

Arrow local_arrow(const Word& w, const Bisection::Local& l) { return Arrow{w, l.germ, l.ran, l.tag}; }

// Arrows of b cut until source and range each lie in one part, bucketed by part pair.
std::map<std::pair<int, int>, std::vector<Arrow>> split_to_parts(const Bisection& b, const Partition& p) {
  std::map<std::pair<int, int>, std::vector<Arrow>> out;
  const auto& space = *b.groupoid()->space();
  std::vector<Arrow> work(b.arrows().begin(), b.arrows().end());
  while (!work.empty()) {
    Arrow a = std::move(work.back());
    work.pop_back();
    const int pd = p.part_of(a.dom);
    const int pr = p.part_of(a.ran);
    if (pd >= 0 && pr >= 0) {
      out[{pd, pr}].push_back(std::move(a));
      continue;
    }
    for (Letter x : space.successors(a.dom)) {
      const Word w = a.dom + x;
      work.push_back(local_arrow(w, *b.at(w)));
    }
  }
  return out;
}

// Part cell word of a cylinder partition.
const Word& cell_word(const Partition& p, int i) {
  const auto& words = p.parts().at(i).words();
  if (words.size() != 1) throw Error("generating-set construction needs a cylinder partition");
  return words[0];
}

// Words t in parts outside `used` with the tails of cell c, one per part.
std::vector<Word> partners(const SequenceSpace& space, const Partition& p, const Word& c, std::set<int> used,
                           std::size_t count) {
  std::vector<Word> out;
  for (std::size_t extra = 0; extra <= 2 && out.size() < count; ++extra)
    for (const auto& t : space.words_of_length(c.size() + extra)) {
      if (out.size() >= count) break;
      const int part = p.part_of(t);
      if (part < 0 || used.count(part) || !space.tail_compatible(c, t)) continue;
      used.insert(part);
      out.push_back(t);
    }
  return out;
}

std::string arrow_text(const Groupoid& g, const Arrow& a) {
  const auto& space = *g.space();
  auto w = [&](const Word& x) { return x.empty() ? std::string("ε") : space.format(x); };
  return "(" + w(a.dom) + " | " + g.germs().name(a.germ) + " | " + w(a.ran) + ")";
}

bool arrow_covered_by(const Groupoid& g, const Bisection& entry, const Arrow& a) {
  auto l = entry.at(a.dom);
  return l && l->ran == a.ran && l->germ == a.germ && (!g.action() || l->tag == a.tag);
}

void add_unique(std::vector<NamedBisection>& out, std::unordered_set<std::string>& seen, NamedBisection nb) {
  if (nb.bisection.is_empty()) return;
  if (seen.insert(nb.bisection.key()).second) out.push_back(std::move(nb));
}

}  // namespace

PartitionChoice choose_partition(const GroupoidPtr& groupoid, const std::vector<NamedBisection>& basic,
                                 std::size_t depth, const SearchBounds& bounds) {
  const auto& space = *groupoid->space();
  PartitionChoice out{Partition::cylinders(groupoid->space(), depth), {}};
  std::vector<Bisection> moves;
  for (const auto& b : basic) {
    moves.push_back(b.bisection);
    moves.push_back(b.bisection.inverse());
  }
  const auto& P = out.partition;
  for (std::size_t i = 0; i < P.size(); ++i) {
    std::vector<Word> samples{cell_word(P, static_cast<int>(i))};
    while (!samples.empty()) {
      Word z = std::move(samples.back());
      samples.pop_back();
      // images of the cylinder z under products of basic bisections
      std::set<int> parts{P.part_of(z)};
      std::set<Word> seen{z};
      std::vector<Word> frontier{z};
      for (std::size_t len = 0; len < bounds.product_length && parts.size() < 5 && !frontier.empty(); ++len) {
        std::vector<Word> next;
        for (const auto& u : frontier)
          for (const auto& m : moves) {
            if (m.coverage(u) != Bisection::Coverage::inside) continue;
            Word v = m.at(u)->ran;
            if (seen.size() >= bounds.max_images || !seen.insert(v).second) continue;
            if (int part = P.part_of(v); part >= 0) parts.insert(part);
            next.push_back(std::move(v));
          }
        frontier = std::move(next);
      }
      if (parts.size() >= 5) continue;
      if (z.size() < depth + bounds.extra_depth) {
        for (Letter x : space.successors(z)) samples.push_back(z + x);
      } else {
        out.orbits.undetermined.push_back(z);
      }
    }
  }
  out.orbits.verified = out.orbits.undetermined.empty();
  return out;
}

Cover build_cover(const GroupoidPtr& groupoid, const std::vector<NamedBisection>& basic, const Partition& partition) {
  const auto& space = *groupoid->space();
  Cover cover;
  std::unordered_set<std::string> seen;

  // cylinder exchanges (c, id, t): four per part into pairwise different parts
  std::map<int, std::vector<Bisection>> exchanges;
  for (std::size_t i = 0; i < partition.size(); ++i) {
    const Word& c = cell_word(partition, static_cast<int>(i));
    for (const auto& t : partners(space, partition, c, {static_cast<int>(i)}, 4)) {
      Bisection e(groupoid, {Arrow{c, kIdentity, t, literal_tag(c, kIdentity, t)}});
      exchanges[static_cast<int>(i)].push_back(e);
      const std::string name = "x(" + space.format(c) + ">" + space.format(t) + ")";
      cover.augmentation.push_back(name);
      add_unique(cover.elements, seen, {name, e});
      add_unique(cover.elements, seen, {name + "^-1", e.inverse()});
    }
  }

  for (const auto& b : basic)
    for (const auto& [name, bis] : {std::pair{b.name, b.bisection}, std::pair{b.name + "^-1", b.bisection.inverse()}}) {
      for (auto& [pq, arrows] : split_to_parts(bis, partition)) {
        Bisection piece(groupoid, arrows);
        if (piece.is_identity()) continue;
        const std::string piece_name = name + "[" + std::to_string(pq.first) + ">" + std::to_string(pq.second) + "]";
        if (pq.first != pq.second) {
          add_unique(cover.elements, seen, {piece_name, piece});
          add_unique(cover.elements, seen, {piece_name + "^-1", piece.inverse()});
          continue;
        }
        // a piece inside one part is U⁻¹(UF) for an exchange U out of that part
        auto it = exchanges.find(pq.first);
        if (it == exchanges.end() || it->second.empty())
          throw Error("part " + std::to_string(pq.first) + " has no tail-compatible exchange partner");
        Bisection uf = compose(it->second[0], piece);
        add_unique(cover.elements, seen, {"x*" + piece_name, uf});
        add_unique(cover.elements, seen, {"x*" + piece_name + "^-1", uf.inverse()});
      }
    }
  return cover;
}

std::vector<Bisection> build_T(const std::vector<NamedBisection>& cover, const Partition& partition) {
  std::vector<Bisection> out;
  if (cover.empty()) return out;
  // cover elements indexed by the part holding their source
  std::map<int, std::vector<std::size_t>> by_source;
  for (std::size_t i = 0; i < cover.size(); ++i) {
    std::set<int> parts;
    for (const auto& a : cover[i].bisection.arrows()) parts.insert(partition.part_of(a.dom));
    for (int p : parts) by_source[p].push_back(i);
  }
  auto parts_met = [&](const ClopenSet& set) {
    std::set<int> parts;
    for (std::size_t i = 0; i < partition.size(); ++i)
      if (!partition.parts()[i].is_disjoint(set)) parts.insert(static_cast<int>(i));
    return parts;
  };

  std::unordered_set<std::string> seen_products, seen_t;
  auto emit = [&](const Bisection& h) {
    for (auto& [pq, arrows] : split_to_parts(h, partition)) {
      if (pq.first == pq.second) continue;
      Bisection piece(h.groupoid(), std::move(arrows));
      if (seen_t.insert(piece.key()).second) out.push_back(std::move(piece));
    }
  };
  std::vector<Bisection> level;
  for (const auto& c : cover) {
    if (seen_products.insert(c.bisection.key()).second) {
      level.push_back(c.bisection);
      emit(c.bisection);
    }
  }
  for (int k = 2; k <= 3; ++k) {
    std::vector<Bisection> next;
    for (const auto& h : level) {
      std::set<std::size_t> candidates;
      for (int p : parts_met(h.range()))
        if (auto it = by_source.find(p); it != by_source.end()) candidates.insert(it->second.begin(), it->second.end());
      for (auto i : candidates) {
        Bisection prod = compose(cover[i].bisection, h);
        if (prod.is_empty() || !seen_products.insert(prod.key()).second) continue;
        emit(prod);
        if (k < 3) next.push_back(std::move(prod));
      }
    }
    level = std::move(next);
  }
  return out;
}

std::vector<std::string> uncovered(const std::vector<Bisection>& t, const std::vector<Multisection>& m) {
  std::vector<std::string> missing;
  for (const auto& b : t)
    for (const auto& a : b.arrows()) {
      bool covered = false;
      for (const auto& ms : m) {
        for (int i = 0; i < ms.degree() && !covered; ++i)
          for (int j = 0; j < ms.degree() && !covered; ++j)
            if (i != j && arrow_covered_by(*b.groupoid(), ms.at(i, j), a)) covered = true;
        if (covered) break;
      }
      if (!covered) missing.push_back(arrow_text(*b.groupoid(), a));
    }
  return missing;
}

MConstruction build_M(const std::vector<Bisection>& t, const Partition& partition) {
  MConstruction out;
  if (t.empty()) return out;
  const GroupoidPtr groupoid = t[0].groupoid();
  const auto& space = *groupoid->space();

  std::map<std::pair<int, int>, std::vector<Arrow>> pending;
  for (const auto& b : t)
    for (const auto& a : b.arrows()) pending[{partition.part_of(a.dom), partition.part_of(a.ran)}].push_back(a);

  // off-diagonal entries of the multisections built so far, by part pair
  std::map<std::pair<int, int>, std::vector<std::pair<std::size_t, std::pair<int, int>>>> entries;
  auto covered = [&](const std::pair<int, int>& pq, const Arrow& a) {
    auto it = entries.find(pq);
    if (it == entries.end()) return false;
    for (const auto& [mi, ij] : it->second)
      if (arrow_covered_by(*groupoid, out.multisections[mi].at(ij.first, ij.second), a)) return true;
    return false;
  };

  for (auto& [pq, arrows] : pending) {
    std::sort(arrows.begin(), arrows.end(), [](const Arrow& x, const Arrow& y) {
      if (x.dom.size() != y.dom.size()) return x.dom.size() < y.dom.size();
      return std::tie(x.dom, x.ran, x.germ) < std::tie(y.dom, y.ran, y.germ);
    });
    // greedy packing of uncovered arrows into bisections
    std::vector<std::vector<Arrow>> groups;
    for (const auto& a : arrows) {
      if (covered(pq, a)) continue;
      bool placed = false;
      for (auto& grp : groups) {
        bool clash = false, subsumed = false;
        for (const auto& b : grp) {
          if (is_prefix(b.dom, a.dom)) {
            subsumed = arrow_covered_by(*groupoid, Bisection(groupoid, {b}), a);
            clash = !subsumed;
          } else if (comparable(a.dom, b.dom) || comparable(a.ran, b.ran)) {
            clash = true;
          }
          if (clash || subsumed) break;
        }
        if (subsumed) {
          placed = true;
          break;
        }
        if (!clash) {
          grp.push_back(a);
          placed = true;
          break;
        }
      }
      if (!placed) groups.push_back({a});
    }

    const Word& c = cell_word(partition, pq.first);
    for (auto& grp : groups) {
      Bisection f01(groupoid, grp);
      const ClopenSet w = f01.source();
      auto targets = partners(space, partition, c, {pq.first, pq.second}, 3);
      if (targets.size() < 3) {
        for (const auto& a : grp) out.missing.push_back(arrow_text(*groupoid, a));
        continue;
      }
      std::vector<Bisection> spokes{Bisection::identity(groupoid, w), f01};
      for (const auto& tw : targets)
        spokes.push_back(Bisection(groupoid, {Arrow{c, kIdentity, tw, literal_tag(c, kIdentity, tw)}}).restrict(w));
      Multisection ms = from_spokes(spokes, w);
      const std::size_t mi = out.multisections.size();
      std::vector<int> parts{pq.first, pq.second};
      for (const auto& tw : targets) parts.push_back(partition.part_of(tw));
      out.multisections.push_back(std::move(ms));
      for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j)
          if (i != j) entries[{parts[i], parts[j]}].push_back({mi, {i, j}});
    }
  }
  return out;
}

GeneratingSetReport generating_set(const GroupoidPtr& groupoid, const std::vector<NamedBisection>& basic,
                                   std::size_t depth, const SearchBounds& bounds) {
  GeneratingSetReport r;
  r.partition = choose_partition(groupoid, basic, depth, bounds);
  if (r.partition.partition.size() < 5) throw Error("partition has fewer than five parts");
  r.cover = build_cover(groupoid, basic, r.partition.partition);
  r.t = build_T(r.cover.elements, r.partition.partition);
  r.m = build_M(r.t, r.partition.partition);
  std::unordered_set<std::string> seen;
  for (const auto& ms : r.m.multisections)
    for (auto& g : alternating_generators(ms))
      if (seen.insert(g.key()).second) r.generators.push_back(std::move(g));
  return r;
}

FullGroupElement evaluate_word(const GeneratorWord& word, const std::vector<FullGroupElement>& gens,
                               const GroupoidPtr& groupoid) {
  FullGroupElement acc = FullGroupElement::identity(groupoid);
  for (const auto& [i, e] : word) acc = multiply(acc, e > 0 ? gens.at(i) : invert(gens.at(i)));
  return acc;
}

namespace {

// Breadth-first search over words in gens ∪ gens⁻¹ for the first product
// accepted by hit.
template <class Hit>
MembershipResult word_search(const GroupoidPtr& groupoid, const std::vector<FullGroupElement>& gens,
                             std::size_t max_len, std::size_t max_states, Hit&& hit) {
  MembershipResult r;
  auto id = FullGroupElement::identity(groupoid);
  if (hit(id, id.key())) {
    r.found = true;
    return r;
  }
  std::vector<FullGroupElement> moves;
  std::vector<std::pair<std::size_t, int>> labels;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    moves.push_back(gens[i]);
    labels.push_back({i, 1});
    auto inv = invert(gens[i]);
    if (inv.key() != gens[i].key()) {
      moves.push_back(std::move(inv));
      labels.push_back({i, -1});
    }
  }
  struct Node {
    std::size_t parent;
    std::size_t move;
  };
  std::vector<Node> nodes{{0, 0}};
  std::vector<FullGroupElement> frontier{id};
  std::vector<std::size_t> frontier_nodes{0};
  std::unordered_set<std::string> seen{id.key()};
  auto word_of = [&](std::size_t n) {
    GeneratorWord w;
    for (; n != 0; n = nodes[n].parent) w.push_back(labels[nodes[n].move]);
    std::reverse(w.begin(), w.end());
    return w;
  };
  for (std::size_t len = 1; len <= max_len && !frontier.empty(); ++len) {
    std::vector<FullGroupElement> next;
    std::vector<std::size_t> next_nodes;
    for (std::size_t f = 0; f < frontier.size(); ++f)
      for (std::size_t m = 0; m < moves.size(); ++m) {
        FullGroupElement e = multiply(frontier[f], moves[m]);
        std::string k = e.key();
        if (!seen.insert(k).second) continue;
        nodes.push_back({frontier_nodes[f], m});
        ++r.explored;
        if (hit(e, k)) {
          r.found = true;
          r.word = word_of(nodes.size() - 1);
          r.reached_length = len;
          return r;
        }
        if (seen.size() >= max_states) {
          r.reached_length = len - 1;
          return r;
        }
        next.push_back(std::move(e));
        next_nodes.push_back(nodes.size() - 1);
      }
    frontier = std::move(next);
    frontier_nodes = std::move(next_nodes);
    r.reached_length = len;
  }
  return r;
}

}  // namespace

MembershipResult bounded_membership(const FullGroupElement& g, const std::vector<FullGroupElement>& gens,
                                    std::size_t max_len, std::size_t max_states) {
  const std::string target = g.key();
  return word_search(g.groupoid(), gens, max_len, max_states,
                     [&](const FullGroupElement&, const std::string& k) { return k == target; });
}

MembershipResult conjugator_search(const FullGroupElement& g, const FullGroupElement& h,
                                   const std::vector<FullGroupElement>& gens, std::size_t max_len,
                                   std::size_t max_states) {
  return word_search(g.groupoid(), gens, max_len, max_states,
                     [&](const FullGroupElement& k, const std::string&) { return conjugate(g, k).equals(h); });
}

std::optional<Perm> induced_permutation(const FullGroupElement& g, std::size_t depth) {
  const auto& space = *g.groupoid()->space();
  const auto cells = space.words_of_length(depth);
  std::map<Word, int> index;
  for (std::size_t i = 0; i < cells.size(); ++i) index[cells[i]] = static_cast<int>(i);
  Perm p(cells.size());
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (g.table().coverage(cells[i]) != Bisection::Coverage::inside) return std::nullopt;
    auto l = g.table().at(cells[i]);
    auto it = index.find(l->ran);
    if (it == index.end()) return std::nullopt;
    p[i] = it->second;
  }
  return p;
}

}  // namespace tfg
