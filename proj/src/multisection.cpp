#include "tfg/multisection.hpp"

namespace tfg {

namespace {

std::string triple(int a, int b, int c) {
  return "(" + std::to_string(a + 1) + "," + std::to_string(b + 1) + "," + std::to_string(c + 1) + ")";
}

}  // namespace

Multisection::Multisection(GroupoidPtr groupoid, std::vector<std::vector<Bisection>> grid)
    : groupoid_(std::move(groupoid)), grid_(std::move(grid)) {
  for (const auto& row : grid_) {
    if (row.size() != grid_.size()) throw Error("multisection grid is not square");
    for (const auto& b : row)
      if (b.groupoid().get() != groupoid_.get()) throw Error("multisection entries belong to different groupoids");
  }
}

ClopenSet Multisection::domain() const {
  auto out = ClopenSet::empty(groupoid_->space());
  for (int i = 0; i < degree(); ++i) out = out.united(component(i));
  return out;
}

bool Multisection::is_empty() const {
  for (int i = 0; i < degree(); ++i)
    if (!grid_[i][i].is_empty()) return false;
  return true;
}

std::optional<std::string> Multisection::validate() const {
  const int d = degree();
  for (int i = 0; i < d; ++i) {
    if (!grid_[i][i].is_identity()) return "diagonal entry (" + std::to_string(i + 1) + ") is not an identity bisection";
    for (int j = 0; j < i; ++j)
      if (!component(i).is_disjoint(component(j)))
        return "components " + std::to_string(j + 1) + " and " + std::to_string(i + 1) + " overlap";
  }
  for (int i1 = 0; i1 < d; ++i1)
    for (int i2 = 0; i2 < d; ++i2)
      for (int i3 = 0; i3 < d; ++i3)
        if (!compose(grid_[i2][i3], grid_[i1][i2]).equals(grid_[i1][i3]))
          return "composition axiom fails at " + triple(i1, i2, i3);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (!grid_[j][i].equals(grid_[i][j].inverse()))
        return "entry (" + std::to_string(j + 1) + "," + std::to_string(i + 1) + ") is not the inverse of (" +
               std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
  return std::nullopt;
}

Multisection from_spokes(const std::vector<Bisection>& spokes, const ClopenSet& base) {
  if (spokes.empty()) throw Error("from_spokes needs at least one spoke");
  const auto& g = spokes[0].groupoid();
  const int d = static_cast<int>(spokes.size());
  std::vector<Bisection> local;
  for (int i = 0; i < d; ++i) {
    if (!base.is_subset(spokes[i].source()))
      throw Error("spoke " + std::to_string(i + 1) + " is not defined on the whole base set");
    local.push_back(spokes[i].restrict(base));
  }
  if (!local[0].is_identity()) throw Error("first spoke is not the identity on the base set");
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < i; ++j)
      if (!local[i].range().is_disjoint(local[j].range()))
        throw Error("ranges of spokes " + std::to_string(j + 1) + " and " + std::to_string(i + 1) + " overlap");
  std::vector<Bisection> inverses;
  for (const auto& b : local) inverses.push_back(b.inverse());
  std::vector<std::vector<Bisection>> grid(d, std::vector<Bisection>(d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) grid[i][j] = compose(local[j], inverses[i]);
  return Multisection(g, std::move(grid));
}

FullGroupElement embed(const Multisection& m, const Perm& pi) {
  if (static_cast<int>(pi.size()) != m.degree() || !perm_valid(pi)) throw Error("permutation degree mismatch");
  const auto& g = m.groupoid();
  std::vector<Arrow> arrows;
  for (int i = 0; i < m.degree(); ++i)
    for (const auto& a : m.at(i, pi[i]).arrows()) arrows.push_back(a);
  const ClopenSet rest = m.domain().complemented();
  for (const auto& w : rest.words()) arrows.push_back(Arrow{w, kIdentity, w, {}});
  return FullGroupElement(Bisection(g, std::move(arrows)));
}

std::vector<FullGroupElement> alternating_generators(const Multisection& m) {
  std::vector<FullGroupElement> out;
  for (int k = 2; k < m.degree(); ++k) out.push_back(embed(m, perm_cycle(m.degree(), {0, 1, k})));
  return out;
}

Multisection restrict(const Multisection& m, const ClopenSet& set, int i) {
  if (!set.is_subset(m.component(i))) throw Error("restriction set is not inside the chosen component");
  const int d = m.degree();
  std::vector<ClopenSet> parts;
  for (int j = 0; j < d; ++j) parts.push_back(m.at(i, j).restrict(set).range());
  std::vector<std::vector<Bisection>> grid(d, std::vector<Bisection>(d));
  for (int j = 0; j < d; ++j)
    for (int k = 0; k < d; ++k) grid[j][k] = m.at(j, k).restrict(parts[j]);
  return Multisection(m.groupoid(), std::move(grid));
}

CoverSplit split_by_cover(const Multisection& m, const Multisection& f1, const Multisection& f2) {
  const int d = m.degree();
  if (f1.degree() != d || f2.degree() != d) throw Error("cover multisections must have the same degree");
  std::vector<std::vector<Bisection>> p(d, std::vector<Bisection>(d)), d1 = p, d2 = p;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      if (!f1.at(i, j).united(f2.at(i, j)).equals(m.at(i, j)))
        throw Error("covers do not unite to entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
      p[i][j] = f1.at(i, j).intersected(f2.at(i, j));
      d1[i][j] = f1.at(i, j).minus(f2.at(i, j));
      d2[i][j] = f2.at(i, j).minus(f1.at(i, j));
    }
  CoverSplit out{Multisection(m.groupoid(), std::move(p)), Multisection(m.groupoid(), std::move(d1)),
                 Multisection(m.groupoid(), std::move(d2))};
  for (const auto* piece : {&out.common, &out.first, &out.second})
    if (auto v = piece->validate()) throw Error("cover piece is not a multisection: " + *v);
  return out;
}

Multisection glue(const Multisection& g, const Multisection& h) {
  if (g.degree() < 3 || h.degree() < 3) throw Error("glue needs degrees at least 3");
  const ClopenSet shared = g.component(0).intersected(h.component(0));
  if (!(g.domain().intersected(h.domain()) == shared))
    throw Error("domains overlap outside the distinguished components");
  const auto gr = restrict(g, shared, 0);
  const auto hr = restrict(h, shared, 0);
  std::vector<Bisection> spokes;
  for (int j = 0; j < gr.degree(); ++j) spokes.push_back(gr.at(0, j));
  for (int j = 1; j < hr.degree(); ++j) spokes.push_back(hr.at(0, j));
  const int d = static_cast<int>(spokes.size());
  std::vector<Bisection> inverses;
  for (const auto& s : spokes) inverses.push_back(s.inverse());
  std::vector<std::vector<Bisection>> grid(d, std::vector<Bisection>(d));
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) grid[a][b] = compose(spokes[b], inverses[a]);
  return Multisection(g.groupoid(), std::move(grid));
}

}  // namespace tfg
