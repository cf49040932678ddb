#include "tfg/quasicrystal.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace tfg {

namespace {

const double kSqrt5 = std::sqrt(5.0);
const ZPhi kOne{1, 0};
const ZPhi kPhi{0, 1};

std::vector<ZPhi> fibonacci_chain(const CutProjectParams& p, double lo, double hi) {
  std::vector<ZPhi> out;
  if (p.window_length.sign() <= 0) return out;
  const ZPhi wmax = p.window_start + p.window_length;
  const double wlo = p.window_start.to_double();
  const double whi = wmax.to_double();
  const auto n0 = static_cast<std::int64_t>(std::floor((lo - whi) / kSqrt5)) - 1;
  const auto n1 = static_cast<std::int64_t>(std::ceil((hi - wlo) / kSqrt5)) + 1;
  const double phi = kPhi.to_double();
  for (std::int64_t n = n0; n <= n1; ++n) {
    const auto m0 = static_cast<std::int64_t>(std::floor(lo - n * phi)) - 1;
    const auto m1 = static_cast<std::int64_t>(std::ceil(hi - n * phi)) + 1;
    for (std::int64_t m = m0; m <= m1; ++m) {
      const ZPhi x{m, n};
      const double xd = x.to_double();
      if (xd < lo || xd > hi) continue;
      const ZPhi s = x.star();
      if (s < p.window_start || !(s < wmax)) continue;
      out.push_back(x);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

char gap_letter(const ZPhi& g) {
  if (g == kOne) return 'S';
  if (g == kPhi) return 'L';
  return '?';
}

ZPhi letter_length(char c) { return c == 'S' ? kOne : kPhi; }

std::array<double, 2> as_double(const QPoint& p) { return {p[0].to_double(), p[1].to_double()}; }

bool in_box(const PointSample& ps, const QPoint& p, double margin) {
  const auto d = as_double(p);
  for (int k = 0; k < ps.dimension; ++k)
    if (d[k] < ps.lo[k] + margin - kMetricSlack || d[k] > ps.hi[k] - margin + kMetricSlack) return false;
  return true;
}

// indices j != i with |p_j - p_i| <= R, using the x-sorted order
std::vector<std::size_t> neighbours(const PointSample& ps, std::size_t i, double R) {
  std::vector<std::size_t> out;
  const double xi = ps.points[i][0].to_double();
  for (std::size_t j = i; j-- > 0;) {
    if (xi - ps.points[j][0].to_double() > R + kMetricSlack) break;
    if (distance(ps.points[i], ps.points[j]) <= R + kMetricSlack) out.push_back(j);
  }
  for (std::size_t j = i + 1; j < ps.points.size(); ++j) {
    if (ps.points[j][0].to_double() - xi > R + kMetricSlack) break;
    if (distance(ps.points[i], ps.points[j]) <= R + kMetricSlack) out.push_back(j);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<QPoint> patch_at(const PointSample& ps, std::size_t i, double R) {
  std::vector<QPoint> out{QPoint{}};
  for (auto j : neighbours(ps, i, R)) out.push_back({ps.points[j][0] - ps.points[i][0], ps.points[j][1] - ps.points[i][1]});
  std::sort(out.begin(), out.end());
  return out;
}

PatchCensus census(const PointSample& ps, double R, double margin) {
  PatchCensus c;
  c.radius = R;
  c.margin = margin;
  c.class_of.assign(ps.points.size(), -1);
  std::map<std::vector<QPoint>, std::vector<std::size_t>> found;
  for (std::size_t i = 0; i < ps.points.size(); ++i)
    if (in_box(ps, ps.points[i], margin)) found[patch_at(ps, i, R)].push_back(i);
  for (auto& [offsets, where] : found) {
    const int k = static_cast<int>(c.classes.size());
    c.classes.push_back(PatchClass{R, offsets, where.size(), {}});
    for (auto i : where) c.class_of[i] = k;
  }
  return c;
}

std::optional<std::size_t> find_point(const PointSample& ps, const QPoint& p) {
  auto it = std::lower_bound(ps.points.begin(), ps.points.end(), p);
  if (it == ps.points.end() || *it != p) return std::nullopt;
  return static_cast<std::size_t>(it - ps.points.begin());
}

QPoint add(const QPoint& a, const QPoint& b) { return {a[0] + b[0], a[1] + b[1]}; }

std::string point_text(const QPoint& p, int dim) {
  if (dim == 1) return p[0].to_string();
  return "(" + p[0].to_string() + ", " + p[1].to_string() + ")";
}

// largest distance from a point of [a, b] to the nearest of the sorted xs
double coverage_gap(const std::vector<double>& xs, double a, double b) {
  if (xs.empty()) return INFINITY;
  auto nearest = [&](double x) {
    auto it = std::lower_bound(xs.begin(), xs.end(), x);
    double d = INFINITY;
    if (it != xs.end()) d = std::min(d, *it - x);
    if (it != xs.begin()) d = std::min(d, x - *std::prev(it));
    return d;
  };
  double worst = std::max(nearest(a), nearest(b));
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    const double mid = (xs[i] + xs[i + 1]) / 2;
    if (mid >= a && mid <= b) worst = std::max(worst, nearest(mid));
  }
  return worst;
}

}  // namespace

PointSample cut_and_project(const CutProjectParams& params, double lo, double hi) {
  PointSample ps;
  ps.lo = {lo, 0};
  ps.hi = {hi, 0};
  switch (params.kind) {
    case CutProjectParams::Kind::fibonacci: {
      ps.construction = "fibonacci window [" + params.window_start.to_string() + ", " +
                        (params.window_start + params.window_length).to_string() + ")";
      for (const auto& x : fibonacci_chain(params, lo, hi)) ps.points.push_back({x, ZPhi{}});
      break;
    }
    case CutProjectParams::Kind::lattice: {
      if (params.spacing.sign() <= 0) throw Error("lattice spacing must be positive");
      ps.construction = "lattice spacing " + params.spacing.to_string();
      const double s = params.spacing.to_double();
      for (auto k = static_cast<std::int64_t>(std::ceil(lo / s)) - 1; k * s <= hi + 1; ++k) {
        const ZPhi x = ZPhi{k, 0} * params.spacing;
        const double xd = x.to_double();
        if (xd >= lo && xd <= hi) ps.points.push_back({x, ZPhi{}});
      }
      ps.period = QPoint{params.spacing, ZPhi{}};
      break;
    }
    case CutProjectParams::Kind::fibonacci_grid: {
      ps.dimension = 2;
      ps.lo = {lo, lo};
      ps.hi = {hi, hi};
      ps.construction = "fibonacci grid";
      const auto xs = fibonacci_chain(params, lo, hi);
      for (const auto& x : xs)
        for (const auto& y : xs) ps.points.push_back({x, y});
      std::sort(ps.points.begin(), ps.points.end());
      break;
    }
  }
  return ps;
}

std::vector<ZPhi> gaps(const PointSample& ps) {
  if (ps.dimension != 1) throw Error("gaps need a 1D sample");
  std::vector<ZPhi> out;
  for (std::size_t i = 0; i + 1 < ps.points.size(); ++i) out.push_back(ps.points[i + 1][0] - ps.points[i][0]);
  return out;
}

std::string fibonacci_gap_word(const PointSample& ps) {
  std::string out;
  for (const auto& g : gaps(ps)) {
    const char c = gap_letter(g);
    if (c == '?') throw Error("gap " + g.to_string() + " is neither 1 nor φ");
    out += c;
  }
  return out;
}

std::string fibonacci_word(std::size_t n) {
  std::string w = "L";
  while (w.size() < n) {
    std::string next;
    for (char c : w) next += c == 'L' ? "LS" : "L";
    w = std::move(next);
  }
  return w.substr(0, n);
}

double distance(const QPoint& a, const QPoint& b) {
  const double dx = (a[0] - b[0]).to_double();
  const double dy = (a[1] - b[1]).to_double();
  return std::hypot(dx, dy);
}

DelaunayReport check_delaunay(const PointSample& ps, double R, double delta, double margin) {
  DelaunayReport rep;
  rep.margin = margin;
  std::vector<std::size_t> inner;
  for (std::size_t i = 0; i < ps.points.size(); ++i)
    if (in_box(ps, ps.points[i], margin)) inner.push_back(i);
  for (auto i : inner)
    for (auto j : neighbours(ps, i, delta)) {
      if (j <= i || !in_box(ps, ps.points[j], margin)) continue;
      rep.ok = false;
      rep.counterexample = "points " + point_text(ps.points[i], ps.dimension) + " and " +
                           point_text(ps.points[j], ps.dimension) + " at distance " +
                           std::to_string(distance(ps.points[i], ps.points[j])) + " <= " + std::to_string(delta);
      return rep;
    }
  if (ps.dimension == 1) {
    std::vector<double> xs;
    for (const auto& p : ps.points) xs.push_back(p[0].to_double());
    const double worst = coverage_gap(xs, ps.lo[0] + margin, ps.hi[0] - margin);
    if (worst >= R) {
      rep.ok = false;
      rep.counterexample = "a point of the interior is " + std::to_string(worst) + " >= R from the sample";
    }
    return rep;
  }
  const double step = R / 8;
  for (double x = ps.lo[0] + margin; x <= ps.hi[0] - margin; x += step)
    for (double y = ps.lo[1] + margin; y <= ps.hi[1] - margin; y += step) {
      double best = INFINITY;
      for (const auto& p : ps.points) {
        const auto d = as_double(p);
        best = std::min(best, std::hypot(d[0] - x, d[1] - y));
      }
      if (best >= R) {
        rep.ok = false;
        rep.counterexample = "(" + std::to_string(x) + ", " + std::to_string(y) + ") is " + std::to_string(best) +
                             " >= R from the sample";
        return rep;
      }
    }
  return rep;
}

PatchCensus local_complexity(const PointSample& ps, double R) { return census(ps, R, R); }

RepetitivityReport repetitivity_radius(const PointSample& ps, double R) {
  RepetitivityReport rep;
  const auto c = census(ps, R, R);
  if (c.classes.empty()) {
    rep.note = "no interior centers";
    return rep;
  }
  std::vector<std::vector<std::array<double, 2>>> where(c.classes.size());
  for (std::size_t i = 0; i < ps.points.size(); ++i)
    if (c.class_of[i] >= 0) where[c.class_of[i]].push_back(as_double(ps.points[i]));
  double D = 0;
  double extent = INFINITY;
  if (ps.dimension == 1) {
    const double a = ps.lo[0] + R, b = ps.hi[0] - R;
    extent = b - a;
    for (const auto& w : where) {
      std::vector<double> xs;
      for (const auto& p : w) xs.push_back(p[0]);
      D = std::max(D, coverage_gap(xs, a, b));
    }
  } else {
    const double step = std::max(R / 4, 0.25);
    extent = std::min(ps.hi[0] - ps.lo[0], ps.hi[1] - ps.lo[1]) - 2 * R;
    for (double x = ps.lo[0] + R; x <= ps.hi[0] - R; x += step)
      for (double y = ps.lo[1] + R; y <= ps.hi[1] - R; y += step)
        for (const auto& w : where) {
          double best = INFINITY;
          for (const auto& p : w) best = std::min(best, std::hypot(p[0] - x, p[1] - y));
          D = std::max(D, best);
        }
  }
  for (std::size_t k = 0; k < where.size(); ++k)
    if (where[k].size() < 2) {
      rep.note = "class " + std::to_string(k) + " occurs once; box too small";
      return rep;
    }
  if (D > extent / 4) {
    rep.note = "estimate " + std::to_string(D) + " exceeds a quarter of the interior; box too small";
    return rep;
  }
  rep.D = D;
  return rep;
}

std::vector<PatchClass> hull_patches(const PointSample& ps, double R) {
  const auto base = census(ps, R, R);
  std::map<std::pair<std::vector<QPoint>, std::vector<std::size_t>>, std::size_t> found;
  for (std::size_t i = 0; i < ps.points.size(); ++i) {
    if (!in_box(ps, ps.points[i], 2 * R)) continue;
    std::vector<std::size_t> collar;
    const auto& offsets = base.classes[base.class_of[i]].offsets;
    for (const auto& o : offsets) {
      auto j = find_point(ps, add(ps.points[i], o));
      collar.push_back(static_cast<std::size_t>(base.class_of[*j]));
    }
    found[{offsets, collar}]++;
  }
  std::vector<PatchClass> out;
  for (const auto& [key, n] : found) out.push_back(PatchClass{R, key.first, n, key.second});
  return out;
}

TranslationCover translation_bisections(const PointSample& ps, double R) {
  TranslationCover tc;
  tc.radius = R;
  const auto base = census(ps, R, R);
  const double limit = std::max(R, (ps.hi[0] - ps.lo[0]) / 4);
  for (double r = R; r <= limit + kMetricSlack; r *= 2) {
    const auto fine = census(ps, r, r);
    std::set<std::tuple<std::size_t, QPoint, std::size_t>> pieces;
    bool resolved = true;
    for (std::size_t i = 0; i < ps.points.size(); ++i) {
      if (base.class_of[i] < 0 || fine.class_of[i] < 0) continue;
      for (const auto& v : base.classes[base.class_of[i]].offsets) {
        if (v == QPoint{}) continue;
        const auto j = find_point(ps, add(ps.points[i], v));
        if (!j || fine.class_of[*j] < 0) continue;
        const auto s = static_cast<std::size_t>(fine.class_of[i]);
        const auto t = static_cast<std::size_t>(fine.class_of[*j]);
        if (s == t) resolved = false;
        pieces.insert({s, v, t});
      }
    }
    tc.resolved_radius = r;
    tc.classes = fine.classes;
    tc.pieces.clear();
    for (const auto& [s, v, t] : pieces) tc.pieces.push_back(TranslationPiece{r, s, v, t});
    tc.resolved = resolved;
    if (resolved || r * 2 > limit + kMetricSlack) break;
  }
  return tc;
}

LocalRulePermutation local_rule_permutation(const PointSample& ps, double R, const LocalRule& w) {
  LocalRulePermutation out;
  const auto c = census(ps, R, R);
  std::map<std::size_t, std::size_t> alpha;
  std::set<std::size_t> hit;
  for (std::size_t i = 0; i < ps.points.size(); ++i) {
    if (c.class_of[i] < 0) continue;
    const auto& cls = c.classes[c.class_of[i]];
    const auto v = w(cls);
    if (!v) throw Error("local rule undefined on patch class " + std::to_string(c.class_of[i]));
    const auto j = find_point(ps, add(ps.points[i], *v));
    if (!j)
      throw Error("rule image of " + point_text(ps.points[i], ps.dimension) + " is not a sample point");
    if (!hit.insert(*j).second)
      throw Error("rule is not injective: two points map to " + point_text(ps.points[*j], ps.dimension));
    alpha[i] = *j;
    out.domain.push_back(i);
    out.image.push_back(*j);
  }
  std::set<std::size_t> seen;
  for (auto start : out.domain) {
    if (seen.count(start)) continue;
    std::size_t len = 0, x = start;
    bool closed = false;
    std::vector<std::size_t> path;
    while (true) {
      path.push_back(x);
      seen.insert(x);
      ++len;
      auto it = alpha.find(x);
      if (it == alpha.end()) break;
      x = it->second;
      if (x == start) {
        closed = true;
        break;
      }
      if (seen.count(x)) break;
    }
    if (closed)
      out.orbit_lengths.push_back(len);
    else
      out.truncated += path.size();
  }
  std::sort(out.orbit_lengths.begin(), out.orbit_lengths.end());
  return out;
}

LocalRule gap_pattern_rule(const std::string& pattern, std::size_t cycle) {
  if (cycle == 0 || cycle > pattern.size() + 1) throw Error("cycle length must be in 1..|pattern|+1");
  for (char ch : pattern)
    if (ch != 'S' && ch != 'L') throw Error("pattern letters must be S or L");
  ZPhi total{};
  for (char ch : pattern) total = total + letter_length(ch);
  return [pattern, cycle, total](const PatchClass& cls) -> std::optional<QPoint> {
    if (cls.radius + kMetricSlack < total.to_double()) throw Error("patch radius is smaller than the pattern");
    const auto& off = cls.offsets;
    const auto o = static_cast<std::size_t>(std::find(off.begin(), off.end(), QPoint{}) - off.begin());
    std::string right, left;  // gap letters outward from the origin
    for (std::size_t k = o + 1; k < off.size(); ++k) right += gap_letter(off[k][0] - off[k - 1][0]);
    for (std::size_t k = o; k-- > 0;) left += gap_letter(off[k + 1][0] - off[k][0]);
    std::optional<std::size_t> role;
    for (std::size_t i = 0; i < cycle; ++i) {
      if (left.size() < i || right.size() < pattern.size() - i) continue;
      bool match = right.compare(0, pattern.size() - i, pattern, i, pattern.size() - i) == 0;
      for (std::size_t k = 0; k < i && match; ++k) match = left[k] == pattern[i - 1 - k];
      if (!match) continue;
      if (role) throw Error("pattern occurrences overlap");
      role = i;
    }
    if (!role) return QPoint{};
    if (*role + 1 < cycle) return QPoint{letter_length(pattern[*role]), ZPhi{}};
    ZPhi back{};
    for (std::size_t k = 0; k + 1 < cycle; ++k) back = back + letter_length(pattern[k]);
    return QPoint{-back, ZPhi{}};
  };
}

SymbolicPresentation symbolic_presentation(const PointSample& ps) {
  const auto g = gaps(ps);
  if (g.size() < 2) throw Error("sample too small for a symbolic presentation");
  std::vector<ZPhi> lengths(g.begin(), g.end());
  std::sort(lengths.begin(), lengths.end());
  lengths.erase(std::unique(lengths.begin(), lengths.end()), lengths.end());
  const bool fib = std::all_of(lengths.begin(), lengths.end(), [](const ZPhi& x) { return gap_letter(x) != '?'; });
  std::vector<std::string> names;
  for (std::size_t i = 0; i < lengths.size(); ++i)
    names.push_back(fib ? std::string(1, gap_letter(lengths[i])) : "g" + std::to_string(i));
  auto name_of = [&](const ZPhi& x) {
    return names[static_cast<std::size_t>(std::lower_bound(lengths.begin(), lengths.end(), x) - lengths.begin())];
  };
  std::set<std::pair<std::string, std::string>> allowed;
  std::string word;
  for (std::size_t i = 0; i < g.size(); ++i) {
    word += name_of(g[i]);
    if (!fib) word += ' ';
    if (i + 1 < g.size()) allowed.insert({name_of(g[i]), name_of(g[i + 1])});
  }
  SymbolicPresentation out;
  out.letter_lengths = lengths;
  out.gap_word = word;
  auto space = SequenceSpace::sft(names, {allowed.begin(), allowed.end()});
  out.groupoid = make_groupoid(space);
  for (const auto& [c, d] : allowed) {
    const std::string sep = fib ? "" : ".";
    out.basic.push_back(
        NamedBisection{"t_" + c + d, Bisection::literal(out.groupoid, {c + sep + d}, {"id"}, {d})});
  }
  return out;
}

RipsReport rips_h1_z2(const PointSample& ps, double R) {
  RipsReport rep;
  const std::size_t n = ps.points.size();
  rep.vertices = n;
  std::vector<std::vector<std::size_t>> adj(n);
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> edge_index;
  for (std::size_t i = 0; i < n; ++i)
    for (auto j : neighbours(ps, i, R)) {
      adj[i].push_back(j);
      if (i < j) edge_index.emplace(std::make_pair(i, j), edge_index.size());
    }
  rep.edges = edge_index.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  rep.components = n;
  for (const auto& [e, k] : edge_index) {
    const auto a = find(e.first), b = find(e.second);
    if (a != b) {
      parent[a] = b;
      --rep.components;
    }
  }
  // rank of the triangle boundary map by pivot reduction on sorted edge lists
  std::map<std::size_t, std::vector<std::size_t>> pivots;
  std::size_t rank = 0;
  for (const auto& [e, k] : edge_index) {
    const auto [i, j] = e;
    for (auto m : adj[j]) {
      if (m <= j || !std::binary_search(adj[i].begin(), adj[i].end(), m)) continue;
      ++rep.triangles;
      std::vector<std::size_t> col{k, edge_index.at({i, m}), edge_index.at({j, m})};
      std::sort(col.begin(), col.end());
      while (!col.empty()) {
        auto it = pivots.find(col.back());
        if (it == pivots.end()) break;
        std::vector<std::size_t> sum;
        std::set_symmetric_difference(col.begin(), col.end(), it->second.begin(), it->second.end(),
                                      std::back_inserter(sum));
        col = std::move(sum);
      }
      if (!col.empty()) {
        pivots[col.back()] = std::move(col);
        ++rank;
      }
    }
  }
  const std::size_t cycles = rep.edges - (n - rep.components);
  rep.beta1 = cycles - rank;
  return rep;
}

std::string to_csv(const PointSample& ps) {
  std::ostringstream os;
  os.precision(17);
  os << "x,y,x_exact,y_exact\n";
  for (const auto& p : ps.points)
    os << p[0].to_double() << ',' << p[1].to_double() << ',' << p[0].to_string() << ',' << p[1].to_string() << '\n';
  return os.str();
}

}  // namespace tfg
