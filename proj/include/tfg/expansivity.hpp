#pragma once

#include <string>
#include <vector>

#include "tfg/generators.hpp"

namespace tfg {

/// Named bisections closed under inverses; inverse of "F" is "F^-1".
struct LabeledCover {
  GroupoidPtr groupoid;
  std::vector<NamedBisection> elements;
};

/// Adds the missing inverses (an element equal to its own inverse is kept once).
LabeledCover symmetric_cover(const GroupoidPtr& groupoid, const std::vector<NamedBisection>& elements);

enum class Verdict { expansive, undetermined, refuted };
std::string to_string(Verdict v);

struct SeparationResult {
  Verdict verdict = Verdict::undetermined;
  std::size_t depth = 0;
  std::size_t length = 0;
  std::size_t products = 0;  // distinct products of length <= length
  std::size_t cells = 0;     // cells of the partition generated by their sources
  std::string certificate;
};

/// Partition generated by the sources of all products of at most m cover
/// elements, compared with the depth-n cylinder partition.
SeparationResult separation_check(const LabeledCover& cover, std::size_t n, std::size_t m);

/// Intersection of the sources of all products of at most n cover elements
/// whose source contains the cylinder x. Throws Error("insufficient
/// precision") when a source only partly meets the cylinder.
ClopenSet U_n(const LabeledCover& cover, const Word& x, std::size_t n);

struct CayleyBall {
  Word root;
  std::size_t radius = 0;
  std::vector<std::string> labels;
  struct Vertex {
    Word ran;
    StateId germ;
    Tag tag;
    std::size_t distance;
  };
  std::vector<Vertex> vertices;  // vertices[0] is the root
  struct Edge {
    std::size_t from;
    std::size_t label;
    std::size_t to;
  };
  std::vector<Edge> edges;
};

/// Ball of radius R in the labelled Cayley graph at the cylinder x.
CayleyBall cayley_ball(const LabeledCover& cover, const Word& x, std::size_t radius);

struct BallComparison {
  bool isomorphic = false;
  /// Label word reaching the first difference (empty when isomorphic).
  std::vector<std::string> witness;
};

/// Rooted labelled-graph isomorphism by the unique label-respecting extension.
BallComparison ball_isomorphic(const LabeledCover& cover, const Word& x, const Word& y, std::size_t radius);

std::string to_dot(const CayleyBall& ball, const SequenceSpace& space);

}  // namespace tfg
