#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tfg/generators.hpp"
#include "tfg/zphi.hpp"

namespace tfg {

/// Exact point of R^1 or R^2 with coordinates in Z[φ]; 1D points have y = 0.
using QPoint = std::array<ZPhi, 2>;

/// Metric comparisons against user radii (given as doubles) use this slack.
inline constexpr double kMetricSlack = 1e-9;

struct CutProjectParams {
  enum class Kind {
    fibonacci,       // strip of slope 1/φ; window [window_start, window_start + window_length) in internal space
    lattice,         // degenerate slope: multiples of spacing (periodic)
    fibonacci_grid,  // product of two Fibonacci chains (2D)
  };
  Kind kind = Kind::fibonacci;
  ZPhi window_start{-1, 0};
  ZPhi window_length{0, 1};
  ZPhi spacing{1, 0};
};

struct PointSample {
  int dimension = 1;
  std::array<double, 2> lo{0, 0};
  std::array<double, 2> hi{0, 0};
  std::vector<QPoint> points;  // sorted lexicographically by (x, y)
  std::string construction;
  /// Translation with Q + v = Q, when the construction is periodic.
  std::optional<QPoint> period;
};

/// Box [lo, hi] in 1D; [lo, hi]^2 for the 2D grid.
PointSample cut_and_project(const CutProjectParams& params, double lo, double hi);

/// Consecutive differences of a 1D sample.
std::vector<ZPhi> gaps(const PointSample& ps);
/// Gap word over S = 1 and L = φ; throws Error for any other gap.
std::string fibonacci_gap_word(const PointSample& ps);
/// Prefix of the fixed point of L -> LS, S -> L.
std::string fibonacci_word(std::size_t n);

double distance(const QPoint& a, const QPoint& b);

struct DelaunayReport {
  bool ok = true;
  double margin = 0;
  std::string counterexample;
};

/// Uniform discreteness (distances > δ) and relative density (every interior x
/// within R of a point) on the box shrunk by margin. In 2D relative density is
/// checked on a grid of step R/8.
DelaunayReport check_delaunay(const PointSample& ps, double R, double delta, double margin);

struct PatchClass {
  double radius = 0;
  /// Offsets B_R(q) ∩ Q - q, sorted; always contains the origin.
  std::vector<QPoint> offsets;
  std::size_t occurrences = 0;
  /// For collared classes: class indices (at the same radius) of the offsets.
  std::vector<std::size_t> collar;
};

struct PatchCensus {
  double radius = 0;
  double margin = 0;
  std::vector<PatchClass> classes;
  /// Class index per sample point, or -1 for points outside the interior.
  std::vector<int> class_of;
};

/// Patch classes of the centers at distance >= R from the box boundary.
PatchCensus local_complexity(const PointSample& ps, double R);

struct RepetitivityReport {
  std::optional<double> D;  // nullopt: unverified
  std::string note;
};
RepetitivityReport repetitivity_radius(const PointSample& ps, double R);

/// Collared patch classes: an R-patch together with the R-patch classes of its
/// points (centers at distance >= 2R from the boundary).
std::vector<PatchClass> hull_patches(const PointSample& ps, double R);

struct TranslationPiece {
  double radius = 0;     // radius of the patch cylinders used
  std::size_t source = 0;  // class index at that radius
  QPoint v;
  std::size_t range = 0;
};

struct TranslationCover {
  double radius = 0;
  double resolved_radius = 0;
  std::vector<PatchClass> classes;  // classes at resolved_radius
  std::vector<TranslationPiece> pieces;
  bool resolved = false;  // every piece has source class != range class
};

/// T_v for every offset v of an R-patch, cut into cylinders of patch classes
/// fine enough (radius doubled up to a quarter of the box) that source and
/// range classes differ.
TranslationCover translation_bisections(const PointSample& ps, double R);

/// Offset of α at a patch class, or nullopt if W is undefined there.
using LocalRule = std::function<std::optional<QPoint>(const PatchClass&)>;

struct LocalRulePermutation {
  std::vector<std::size_t> domain;  // sample indices of interior centers
  std::vector<std::size_t> image;   // α(domain[i]) as a sample index
  /// Lengths of the α-orbits lying entirely in the domain, one per orbit, sorted.
  std::vector<std::size_t> orbit_lengths;
  std::size_t truncated = 0;  // domain points whose orbit leaves the domain
};

/// Throws Error if W is not total, an image is not a sample point, or α is not injective.
LocalRulePermutation local_rule_permutation(const PointSample& ps, double R, const LocalRule& w);

/// Rule cycling the first `cycle` points of every occurrence of a gap pattern
/// (letters S = 1, L = φ). Throws Error from the rule if occurrences overlap.
LocalRule gap_pattern_rule(const std::string& pattern, std::size_t cycle);

struct SymbolicPresentation {
  GroupoidPtr groupoid;
  std::vector<NamedBisection> basic;
  std::vector<ZPhi> letter_lengths;
  std::string gap_word;
};

/// One-step SFT of the gap letters with the observed transitions; basic
/// bisections are the translations cd·t -> d·t by one gap.
SymbolicPresentation symbolic_presentation(const PointSample& ps);

struct RipsReport {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t triangles = 0;
  std::size_t components = 0;
  std::size_t beta1 = 0;
  bool connected() const { return components == 1; }
};
RipsReport rips_h1_z2(const PointSample& ps, double R);

std::string to_csv(const PointSample& ps);

}  // namespace tfg
