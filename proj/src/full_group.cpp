#include "tfg/full_group.hpp"

#include <set>

namespace tfg {

FullGroupElement::FullGroupElement(Bisection table) : table_(std::move(table)) {
  if (!table_.groupoid()) throw Error("full group element without groupoid");
  if (!table_.source().is_whole() || !table_.range().is_whole())
    throw Error("table is not a full group element: source and range must be the whole space");
}

FullGroupElement FullGroupElement::identity(const GroupoidPtr& groupoid) {
  return FullGroupElement(Bisection::identity(groupoid, ClopenSet::whole(groupoid->space())));
}

FullGroupElement multiply(const FullGroupElement& g, const FullGroupElement& h) {
  return FullGroupElement(compose(g.table(), h.table()));
}

FullGroupElement invert(const FullGroupElement& g) { return FullGroupElement(g.table().inverse()); }

FullGroupElement conjugate(const FullGroupElement& g, const FullGroupElement& k) {
  return multiply(invert(k), multiply(g, k));
}

FullGroupElement commutator(const FullGroupElement& g, const FullGroupElement& h) {
  return multiply(multiply(invert(g), invert(h)), multiply(g, h));
}

namespace {

// non-unit germs of state q on the cylinder w, as cylinders
void moved(const GermAlgebra& germs, const Word& w, StateId q, std::set<StateId>& path, std::vector<Word>& out) {
  if (q == kIdentity) return;
  if (!path.insert(q).second) {
    out.push_back(w);
    return;
  }
  for (std::size_t i = 0; i < germs.alphabet_size(); ++i) {
    const Letter x = static_cast<Letter>(i);
    if (germs.output(q, x) != x)
      out.push_back(w + x);
    else
      moved(germs, w + x, germs.next(q, x), path, out);
  }
  path.erase(q);
}

}  // namespace

ClopenSet support(const FullGroupElement& g) {
  const auto& gr = *g.groupoid();
  std::vector<Word> out;
  for (const auto& a : g.table().arrows()) {
    if (a.dom != a.ran || (gr.action() && !a.tag.empty())) {
      out.push_back(a.dom);
      continue;
    }
    std::set<StateId> path;
    moved(gr.germs(), a.dom, a.germ, path, out);
  }
  return ClopenSet(gr.space(), std::move(out));
}

FullGroupElement tau(const Bisection& f) {
  const auto s = f.source();
  const auto r = f.range();
  if (!s.is_disjoint(r)) throw Error("tau needs a bisection with disjoint source and range");
  const auto rest = s.united(r).complemented();
  auto table = f.united(f.inverse()).united(Bisection::identity(f.groupoid(), rest));
  return FullGroupElement(std::move(table));
}

}  // namespace tfg
