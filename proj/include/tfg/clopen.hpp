#pragma once

#include <string>
#include <vector>

#include "tfg/sequence_space.hpp"

namespace tfg {

/// Clopen subset of a sequence space, stored as a canonical prefix antichain:
/// no word is a prefix of another and no complete sibling family is present.
/// The empty antichain is the empty set, {ε} is the whole space.
class ClopenSet {
 public:
  ClopenSet() = default;
  ClopenSet(SpacePtr space, std::vector<Word> words);

  static ClopenSet empty(SpacePtr space) { return ClopenSet(std::move(space), {}); }
  static ClopenSet whole(SpacePtr space) { return ClopenSet(std::move(space), {Word()}); }
  static ClopenSet cylinder(SpacePtr space, Word w) { return ClopenSet(std::move(space), {std::move(w)}); }

  const SpacePtr& space() const { return space_; }
  const std::vector<Word>& words() const { return words_; }
  bool is_empty() const { return words_.empty(); }
  bool is_whole() const { return words_.size() == 1 && words_[0].empty(); }
  std::size_t max_depth() const;

  /// Does the cylinder of w lie inside the set?
  bool contains_cylinder(const Word& w) const;
  /// Does the cylinder of w meet the set?
  bool meets_cylinder(const Word& w) const;

  ClopenSet united(const ClopenSet& other) const;
  ClopenSet intersected(const ClopenSet& other) const;
  ClopenSet complemented() const;
  ClopenSet minus(const ClopenSet& other) const;
  bool is_disjoint(const ClopenSet& other) const;
  bool is_subset(const ClopenSet& other) const;

  /// Antichain of depth-n words whose cylinders make up the set; requires n >= max_depth().
  std::vector<Word> cylinders_at_depth(std::size_t n) const;

  std::string to_string() const;

  friend bool operator==(const ClopenSet& a, const ClopenSet& b) {
    return a.space_.get() == b.space_.get() && a.words_ == b.words_;
  }

 private:
  void check_same_space(const ClopenSet& other) const;

  SpacePtr space_;
  std::vector<Word> words_;
};

/// Canonical antichain with the same union of cylinders.
std::vector<Word> canonicalize(const SequenceSpace& space, std::vector<Word> words);

ClopenSet make_clopen(const SpacePtr& space, const std::vector<std::string>& words);

/// Coarsest partition of the space into canonical clopen sets refining every
/// input and its complement. Empty cells are dropped; order is deterministic.
std::vector<ClopenSet> refine(const SpacePtr& space, const std::vector<ClopenSet>& sets);

}  // namespace tfg
