#include "tfg/clopen.hpp"

#include <algorithm>
#include <map>

namespace tfg {

std::vector<Word> canonicalize(const SequenceSpace& space, std::vector<Word> words) {
  for (const auto& w : words)
    if (!space.valid(w)) throw Error("word is not valid in this space");
  std::sort(words.begin(), words.end());
  words.erase(std::unique(words.begin(), words.end()), words.end());

  // prefix absorption; in lexicographic order a prefix precedes its extensions
  std::vector<Word> kept;
  for (auto& w : words) {
    if (!kept.empty() && is_prefix(kept.back(), w)) continue;
    kept.push_back(std::move(w));
  }

  // merge complete sibling families bottom-up until stable
  bool changed = true;
  while (changed) {
    changed = false;
    std::map<Word, std::size_t> family;
    for (const auto& w : kept)
      if (!w.empty()) ++family[w.substr(0, w.size() - 1)];
    std::vector<Word> next;
    std::vector<Word> merged;
    for (const auto& [parent, count] : family)
      if (count == space.successors(parent).size()) merged.push_back(parent);
    if (merged.empty()) break;
    changed = true;
    for (auto& w : kept) {
      if (!w.empty() && std::binary_search(merged.begin(), merged.end(), w.substr(0, w.size() - 1))) continue;
      next.push_back(std::move(w));
    }
    for (auto& p : merged) next.push_back(std::move(p));
    std::sort(next.begin(), next.end());
    kept = std::move(next);
  }
  return kept;
}

ClopenSet::ClopenSet(SpacePtr space, std::vector<Word> words)
    : space_(std::move(space)), words_(canonicalize(*space_, std::move(words))) {}

ClopenSet make_clopen(const SpacePtr& space, const std::vector<std::string>& words) {
  std::vector<Word> parsed;
  for (const auto& w : words) parsed.push_back(space->parse(w));
  return ClopenSet(space, std::move(parsed));
}

std::size_t ClopenSet::max_depth() const {
  std::size_t d = 0;
  for (const auto& w : words_) d = std::max(d, w.size());
  return d;
}

void ClopenSet::check_same_space(const ClopenSet& other) const {
  if (space_.get() != other.space_.get()) throw Error("clopen sets live in different spaces");
}

bool ClopenSet::contains_cylinder(const Word& w) const {
  // canonical form: a covered cylinder always has a prefix in the antichain
  auto it = std::upper_bound(words_.begin(), words_.end(), w);
  if (it == words_.begin()) return false;
  --it;
  return is_prefix(*it, w);
}

bool ClopenSet::meets_cylinder(const Word& w) const {
  if (contains_cylinder(w)) return true;
  auto it = std::lower_bound(words_.begin(), words_.end(), w);
  return it != words_.end() && is_prefix(w, *it);
}

ClopenSet ClopenSet::united(const ClopenSet& other) const {
  check_same_space(other);
  std::vector<Word> all = words_;
  all.insert(all.end(), other.words_.begin(), other.words_.end());
  return ClopenSet(space_, std::move(all));
}

ClopenSet ClopenSet::intersected(const ClopenSet& other) const {
  check_same_space(other);
  std::vector<Word> out;
  for (const auto& a : words_)
    for (const auto& b : other.words_) {
      if (is_prefix(a, b))
        out.push_back(b);
      else if (is_prefix(b, a))
        out.push_back(a);
    }
  return ClopenSet(space_, std::move(out));
}

namespace {

void complement_under(const SequenceSpace& space, const std::vector<Word>& set, const Word& node,
                      std::vector<Word>& out) {
  bool below = false;
  for (const auto& s : set) {
    if (is_prefix(s, node)) return;
    if (is_prefix(node, s)) below = true;
  }
  if (!below) {
    out.push_back(node);
    return;
  }
  std::vector<Word> relevant;
  for (const auto& s : set)
    if (is_prefix(node, s)) relevant.push_back(s);
  for (Letter x : space.successors(node)) complement_under(space, relevant, node + x, out);
}

}  // namespace

ClopenSet ClopenSet::complemented() const {
  std::vector<Word> out;
  complement_under(*space_, words_, Word(), out);
  return ClopenSet(space_, std::move(out));
}

ClopenSet ClopenSet::minus(const ClopenSet& other) const { return intersected(other.complemented()); }

bool ClopenSet::is_disjoint(const ClopenSet& other) const {
  check_same_space(other);
  for (const auto& a : words_)
    for (const auto& b : other.words_)
      if (comparable(a, b)) return false;
  return true;
}

bool ClopenSet::is_subset(const ClopenSet& other) const {
  check_same_space(other);
  return std::all_of(words_.begin(), words_.end(), [&](const Word& w) { return other.contains_cylinder(w); });
}

std::vector<Word> ClopenSet::cylinders_at_depth(std::size_t n) const {
  std::vector<Word> out;
  for (const auto& w : words_) {
    if (w.size() > n) throw Error("set is not representable at the requested depth");
    std::vector<Word> cur{w};
    for (std::size_t i = w.size(); i < n; ++i) {
      std::vector<Word> next;
      for (const auto& c : cur)
        for (Letter x : space_->successors(c)) next.push_back(c + x);
      cur = std::move(next);
    }
    out.insert(out.end(), cur.begin(), cur.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string ClopenSet::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (i) out += ',';
    out += words_[i].empty() ? std::string("ε") : space_->format(words_[i]);
  }
  return out + "}";
}

std::vector<ClopenSet> refine(const SpacePtr& space, const std::vector<ClopenSet>& sets) {
  std::vector<ClopenSet> cells{ClopenSet::whole(space)};
  for (const auto& s : sets) {
    if (s.space().get() != space.get()) throw Error("clopen sets live in different spaces");
    std::vector<ClopenSet> next;
    for (const auto& c : cells) {
      auto in = c.intersected(s);
      auto out = c.minus(s);
      if (!in.is_empty()) next.push_back(std::move(in));
      if (!out.is_empty()) next.push_back(std::move(out));
    }
    cells = std::move(next);
  }
  std::sort(cells.begin(), cells.end(),
            [](const ClopenSet& a, const ClopenSet& b) { return a.words() < b.words(); });
  return cells;
}

}  // namespace tfg
