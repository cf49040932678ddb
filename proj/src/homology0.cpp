#include "tfg/homology0.hpp"

#include <algorithm>
#include <map>
#include <tuple>
#include <unordered_set>

#include "tfg/expansivity.hpp"

namespace tfg {

namespace {

std::vector<Bisection> products(const GroupoidPtr& groupoid, const std::vector<NamedBisection>& basic,
                                std::size_t max_length) {
  const auto cover = symmetric_cover(groupoid, basic);
  std::unordered_set<std::string> seen;
  std::vector<Bisection> all;
  std::vector<Bisection> level;
  for (const auto& c : cover.elements)
    if (seen.insert(c.bisection.key()).second) {
      all.push_back(c.bisection);
      level.push_back(c.bisection);
    }
  for (std::size_t len = 2; len <= max_length && !level.empty(); ++len) {
    std::vector<Bisection> next;
    for (const auto& p : level)
      for (const auto& c : cover.elements) {
        auto q = compose(c.bisection, p);
        if (q.is_empty() || !seen.insert(q.key()).second) continue;
        all.push_back(q);
        next.push_back(std::move(q));
      }
    level = std::move(next);
  }
  return all;
}

void extensions(const SequenceSpace& space, const Word& w, std::size_t max_len, std::vector<Word>& out) {
  out.push_back(w);
  if (w.size() >= max_len) return;
  for (Letter x : space.successors(w)) extensions(space, w + x, max_len, out);
}

}  // namespace

H0Approximation::H0Approximation(SpacePtr space, std::size_t depth)
    : space_(std::move(space)), depth_(depth), cells_(space_->words_of_length(depth)) {
  std::sort(cells_.begin(), cells_.end());
}

std::string H0Approximation::describe() const {
  const auto r = dimension();
  if (r == 0) return "trivial";
  if (r == 1) return "Z/2";
  return "(Z/2)^" + std::to_string(r);
}

CellVector H0Approximation::indicator(const ClopenSet& set) const {
  if (set.max_depth() > depth_) throw Error("clopen set is deeper than the approximation depth");
  CellVector v((cells_.size() + 63) / 64, 0);
  for (const auto& w : set.cylinders_at_depth(depth_)) {
    auto it = std::lower_bound(cells_.begin(), cells_.end(), w);
    if (it == cells_.end() || *it != w) throw Error("word is not a depth-d cell: " + space_->format(w));
    const auto i = static_cast<std::size_t>(it - cells_.begin());
    v[i / 64] ^= 1ull << (i % 64);
  }
  return v;
}

CellVector H0Approximation::reduce(CellVector v) const {
  for (const auto& [p, row] : pivots_)
    if ((v[p / 64] >> (p % 64)) & 1)
      for (std::size_t k = 0; k < v.size(); ++k) v[k] ^= row[k];
  return v;
}

bool H0Approximation::add_relation(const ClopenSet& a, const ClopenSet& b) {
  ++relations_;
  auto v = indicator(a);
  const auto vb = indicator(b);
  for (std::size_t k = 0; k < v.size(); ++k) v[k] ^= vb[k];
  v = reduce(std::move(v));
  std::size_t p = 0;
  for (; p < cells_.size(); ++p)
    if ((v[p / 64] >> (p % 64)) & 1) break;
  if (p == cells_.size()) return false;
  for (auto& [q, row] : pivots_)
    if ((row[p / 64] >> (p % 64)) & 1)
      for (std::size_t k = 0; k < row.size(); ++k) row[k] ^= v[k];
  pivots_.emplace_back(p, std::move(v));
  return true;
}

CellVector H0Approximation::class_of(const ClopenSet& set) const { return reduce(indicator(set)); }

bool H0Approximation::is_zero(const ClopenSet& set) const {
  for (auto x : class_of(set))
    if (x) return false;
  return true;
}

H0Approximation h0_z2(const GroupoidPtr& groupoid, const std::vector<NamedBisection>& basic, std::size_t depth,
                      std::size_t product_bound) {
  const auto& space = groupoid->space();
  H0Approximation h(space, depth);
  auto& germs = groupoid->germs();
  std::vector<Word> ext;
  for (const auto& f : products(groupoid, basic, product_bound)) {
    for (const auto& a : f.arrows()) {
      if (a.dom.size() > depth || a.ran.size() > depth) continue;
      ext.clear();
      extensions(*space, a.dom, depth, ext);
      for (const auto& v : ext) {
        const Word s = v.substr(a.dom.size());
        if (a.ran.size() + s.size() > depth) continue;
        const Word image = a.ran + (a.germ == kIdentity ? s : germs.apply(a.germ, s));
        h.add_relation(ClopenSet::cylinder(space, v), ClopenSet::cylinder(space, image));
      }
    }
  }
  return h;
}

std::optional<Bisection> quotient_bisection(const GroupoidPtr& groupoid, const std::vector<NamedBisection>& basic,
                                            const ClopenSet& u, std::size_t max_length) {
  std::optional<Bisection> best;
  std::tuple<std::size_t, std::string, std::size_t, std::string> best_score;
  for (const auto& p : products(groupoid, basic, max_length)) {
    if (!u.is_subset(p.source())) continue;
    auto f = p.restrict(u);
    if (!f.range().is_disjoint(u)) continue;
    std::size_t drift = 0, moved = 0;
    for (const auto& a : f.arrows()) {
      drift += a.dom.size() > a.ran.size() ? a.dom.size() - a.ran.size() : a.ran.size() - a.dom.size();
      if (a.germ != kIdentity) ++moved;
    }
    auto score = std::make_tuple(drift, f.range().to_string(), moved, f.key());
    if (!best || score < best_score) {
      best_score = std::move(score);
      best = std::move(f);
    }
  }
  return best;
}

FullGroupElement to_quotient_rep(const GroupoidPtr& groupoid, const std::vector<NamedBisection>& basic,
                                 const ClopenSet& u, std::size_t max_length) {
  auto f = quotient_bisection(groupoid, basic, u, max_length);
  if (!f) throw Error("no bisection from " + u.to_string() + " to a disjoint set within the search bound");
  return tau(*f);
}

}  // namespace tfg
