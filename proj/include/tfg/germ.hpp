#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "tfg/sequence_space.hpp"

namespace tfg {

using StateId = std::uint32_t;
inline constexpr StateId kIdentity = 0;

/// Raised when a composition or inversion would need more fresh automaton
/// states than the configured bound.
class GermBoundExceeded : public Error {
 public:
  using Error::Error;
};

/// Input record for one automaton: per state, per letter, the output letter
/// and the next state. State "id" is the built-in identity.
struct AutomatonSpec {
  struct Transition {
    std::string on;
    std::string out;
    std::string to;
  };
  struct State {
    std::string name;
    std::vector<Transition> transitions;
  };
  std::string name;
  std::vector<State> states;
};

/// Closure of invertible Mealy automata over one alphabet, kept minimal at all
/// times so that two states define the same transformation iff they are the
/// same StateId. Declared automata and their inverses form the base set; other
/// states are created lazily by compose() and inverse().
///
/// Thread-safe: every public member locks the internal mutex.
class GermAlgebra {
 public:
  /// alphabet_size == 0 gives an identity-only algebra (non-stationary spaces).
  explicit GermAlgebra(std::size_t alphabet_size, std::size_t state_bound = 64);

  GermAlgebra(const GermAlgebra&) = delete;
  GermAlgebra& operator=(const GermAlgebra&) = delete;

  /// Registers an automaton; returns name -> state for each declared state.
  /// Inverse states are registered as base states named "<name>^-1".
  std::map<std::string, StateId> add_automaton(const AutomatonSpec& spec, const SequenceSpace& space);

  std::size_t alphabet_size() const { return k_; }
  std::size_t state_bound() const { return bound_; }
  std::size_t size() const;

  Letter output(StateId s, Letter x) const;
  StateId next(StateId s, Letter x) const;
  Word apply(StateId s, const Word& w) const;
  StateId residual(StateId s, const Word& w) const;

  /// State acting as w -> g1(g2(w)).
  StateId compose(StateId g1, StateId g2);
  StateId inverse(StateId g);

  bool is_base(StateId s) const;
  /// State with first-letter behaviour (outputs[x], nexts[x]), created if needed.
  StateId state_with(const std::vector<Letter>& outputs, const std::vector<StateId>& nexts);
  /// Base state whose first-letter behaviour matches (outputs[x], nexts[x]).
  std::optional<StateId> find_base(const std::vector<Letter>& outputs, const std::vector<StateId>& nexts) const;

  /// Bisimulation check on the stored automaton; returns a word on which the
  /// two states first produce different outputs, or nullopt if they are equal.
  std::optional<Word> separating_word(StateId a, StateId b) const;

  /// Base-state name, or "q<id>" for derived states.
  std::string name(StateId s) const;
  std::optional<StateId> lookup(const std::string& name) const;

  /// Number of states reachable from s.
  std::size_t reachable_count(StateId s) const;

 private:
  struct Row {
    std::vector<Letter> out;
    std::vector<StateId> next;
  };
  // Temporary states use encoded next pointers: values >= kTempBase refer to temporaries.
  static constexpr std::uint64_t kTempBase = 1ull << 40;
  struct TempRow {
    std::vector<Letter> out;
    std::vector<std::uint64_t> next;
  };

  Letter output_locked(StateId s, Letter x) const;
  StateId next_locked(StateId s, Letter x) const;
  StateId compose_locked(StateId g1, StateId g2);
  StateId inverse_locked(StateId g);
  std::vector<StateId> insert_temps(const std::vector<TempRow>& temps);
  bool temp_bisimilar(const std::vector<TempRow>& temps, std::uint64_t a, std::uint64_t b) const;
  StateId add_row(Row row);

  std::size_t k_;
  std::size_t bound_;
  mutable std::mutex mu_;
  std::vector<Row> rows_;
  std::vector<bool> base_;
  std::map<StateId, std::string> names_;
  std::map<std::string, StateId> by_name_;
  std::map<std::vector<Letter>, std::vector<StateId>> by_output_;
  std::unordered_map<std::uint64_t, StateId> compose_memo_;
  std::unordered_map<StateId, StateId> inverse_memo_;
};

}  // namespace tfg
