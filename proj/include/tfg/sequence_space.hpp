#pragma once

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tfg {

/// A letter is an index into the alphabet of its level.
using Letter = char16_t;

/// Finite prefix of an allowed infinite path. Stored as a u16string so that
/// prefix tests, ordering and hashing come for free.
using Word = std::u16string;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline bool is_prefix(const Word& p, const Word& w) {
  return p.size() <= w.size() && w.compare(0, p.size(), p) == 0;
}

inline bool comparable(const Word& a, const Word& b) {
  return is_prefix(a, b) || is_prefix(b, a);
}

/// One-sided sequence space: a full shift, a one-step SFT, or the path space of
/// a Bratteli diagram. Bratteli diagrams are stationary beyond the last listed
/// edge level.
class SequenceSpace {
 public:
  enum class Kind { full_shift, sft, bratteli };

  struct BratteliEdge {
    std::string name;
    std::size_t src;  // vertex index at level n
    std::size_t dst;  // vertex index at level n + 1
  };

  static std::shared_ptr<const SequenceSpace> full_shift(std::vector<std::string> alphabet);
  static std::shared_ptr<const SequenceSpace> sft(
      std::vector<std::string> alphabet,
      const std::vector<std::pair<std::string, std::string>>& allowed);
  /// vertices[n] names V_{n+1}; edges[n] is E_{n+1} from vertices[n] to vertices[n+1].
  static std::shared_ptr<const SequenceSpace> bratteli(
      std::vector<std::vector<std::string>> vertices,
      std::vector<std::vector<BratteliEdge>> edges);

  Kind kind() const { return kind_; }
  bool stationary() const { return kind_ != Kind::bratteli; }

  std::size_t alphabet_size(std::size_t level) const;
  const std::string& letter_name(std::size_t level, Letter x) const;
  Letter letter_index(std::size_t level, std::string_view name) const;

  /// May `b` at level + 1 follow `a` at level?
  bool allowed(std::size_t level, Letter a, Letter b) const;
  /// Letters that may extend `w` (all first-level letters when w is empty).
  const std::vector<Letter>& successors(const Word& w) const;
  bool valid(const Word& w) const;

  /// True iff the tail spaces after v and after u coincide, so that the prefix
  /// exchange v·t -> u·t is defined for every allowed tail t.
  bool tail_compatible(const Word& v, const Word& u) const;

  std::vector<Word> words_of_length(std::size_t n) const;

  /// Letters are concatenated when every name is a single character,
  /// otherwise joined with '.'.
  std::string format(const Word& w) const;
  Word parse(std::string_view text) const;

  bool same_as(const SequenceSpace& other) const { return this == &other; }

  std::string describe() const;

 private:
  struct Level {
    std::vector<std::string> names;
    // successors_of[a] lists letters allowed after a at the next level
    std::vector<std::vector<Letter>> successors_of;
    std::vector<std::size_t> end_vertex;  // Bratteli only
  };

  SequenceSpace() = default;
  const Level& level(std::size_t n) const;
  void check_no_dead_ends() const;

  Kind kind_ = Kind::full_shift;
  std::vector<Level> levels_;
  std::vector<Letter> first_letters_;
  bool compact_names_ = true;
};

using SpacePtr = std::shared_ptr<const SequenceSpace>;

}  // namespace tfg
