#include "tfg/germ.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace tfg {

GermAlgebra::GermAlgebra(std::size_t alphabet_size, std::size_t state_bound)
    : k_(alphabet_size), bound_(state_bound) {
  Row id;
  for (std::size_t x = 0; x < k_; ++x) {
    id.out.push_back(static_cast<Letter>(x));
    id.next.push_back(kIdentity);
  }
  rows_.push_back(id);
  base_.push_back(true);
  names_[kIdentity] = "id";
  by_name_["id"] = kIdentity;
  by_name_["1"] = kIdentity;
  by_output_[id.out].push_back(kIdentity);
}

std::size_t GermAlgebra::size() const {
  std::lock_guard lock(mu_);
  return rows_.size();
}

Letter GermAlgebra::output_locked(StateId s, Letter x) const {
  if (s == kIdentity) return x;
  return rows_[s].out[x];
}

StateId GermAlgebra::next_locked(StateId s, Letter x) const {
  if (s == kIdentity) return kIdentity;
  return rows_[s].next[x];
}

Letter GermAlgebra::output(StateId s, Letter x) const {
  std::lock_guard lock(mu_);
  return output_locked(s, x);
}

StateId GermAlgebra::next(StateId s, Letter x) const {
  std::lock_guard lock(mu_);
  return next_locked(s, x);
}

Word GermAlgebra::apply(StateId s, const Word& w) const {
  if (s == kIdentity) return w;
  std::lock_guard lock(mu_);
  Word out;
  out.reserve(w.size());
  for (Letter x : w) {
    out.push_back(output_locked(s, x));
    s = next_locked(s, x);
  }
  return out;
}

StateId GermAlgebra::residual(StateId s, const Word& w) const {
  if (s == kIdentity) return s;
  std::lock_guard lock(mu_);
  for (Letter x : w) s = next_locked(s, x);
  return s;
}

bool GermAlgebra::is_base(StateId s) const {
  std::lock_guard lock(mu_);
  return base_.at(s);
}

std::string GermAlgebra::name(StateId s) const {
  std::lock_guard lock(mu_);
  auto it = names_.find(s);
  if (it != names_.end()) return it->second;
  return "q" + std::to_string(s);
}

std::optional<StateId> GermAlgebra::lookup(const std::string& name) const {
  std::lock_guard lock(mu_);
  auto it = by_name_.find(name);
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

std::optional<StateId> GermAlgebra::find_base(const std::vector<Letter>& outputs,
                                              const std::vector<StateId>& nexts) const {
  std::lock_guard lock(mu_);
  auto it = by_output_.find(outputs);
  if (it == by_output_.end()) return std::nullopt;
  for (StateId s : it->second)
    if (base_[s] && rows_[s].next == nexts) return s;
  return std::nullopt;
}

StateId GermAlgebra::state_with(const std::vector<Letter>& outputs, const std::vector<StateId>& nexts) {
  std::lock_guard lock(mu_);
  if (outputs.size() != k_ || nexts.size() != k_) throw Error("state row has the wrong width");
  std::vector<bool> hit(k_, false);
  for (Letter y : outputs) {
    if (y >= k_ || hit[y]) throw Error("state row is not a permutation");
    hit[y] = true;
  }
  TempRow row;
  row.out = outputs;
  for (StateId n : nexts) {
    if (n >= rows_.size()) throw Error("state row refers to an unknown state");
    row.next.push_back(n);
  }
  return insert_temps({row})[0];
}

std::size_t GermAlgebra::reachable_count(StateId s) const {
  std::lock_guard lock(mu_);
  std::set<StateId> seen{s};
  std::vector<StateId> stack{s};
  while (!stack.empty()) {
    StateId t = stack.back();
    stack.pop_back();
    for (std::size_t x = 0; x < k_; ++x) {
      StateId n = next_locked(t, static_cast<Letter>(x));
      if (seen.insert(n).second) stack.push_back(n);
    }
  }
  return seen.size();
}

std::optional<Word> GermAlgebra::separating_word(StateId a, StateId b) const {
  std::lock_guard lock(mu_);
  std::map<std::pair<StateId, StateId>, Word> seen;
  std::deque<std::pair<StateId, StateId>> queue;
  seen[{a, b}] = Word();
  queue.push_back({a, b});
  while (!queue.empty()) {
    auto [p, q] = queue.front();
    queue.pop_front();
    const Word path = seen[{p, q}];
    for (std::size_t i = 0; i < k_; ++i) {
      const Letter x = static_cast<Letter>(i);
      if (output_locked(p, x) != output_locked(q, x)) return path + x;
    }
    for (std::size_t i = 0; i < k_; ++i) {
      const Letter x = static_cast<Letter>(i);
      std::pair<StateId, StateId> nxt{next_locked(p, x), next_locked(q, x)};
      if (seen.emplace(nxt, path + x).second) queue.push_back(nxt);
    }
  }
  return std::nullopt;
}

bool GermAlgebra::temp_bisimilar(const std::vector<TempRow>& temps, std::uint64_t a, std::uint64_t b) const {
  auto out_of = [&](std::uint64_t n, Letter x) -> Letter {
    return n >= kTempBase ? temps[n - kTempBase].out[x] : output_locked(static_cast<StateId>(n), x);
  };
  auto next_of = [&](std::uint64_t n, Letter x) -> std::uint64_t {
    return n >= kTempBase ? temps[n - kTempBase].next[x] : next_locked(static_cast<StateId>(n), x);
  };
  std::set<std::pair<std::uint64_t, std::uint64_t>> seen{{a, b}};
  std::vector<std::pair<std::uint64_t, std::uint64_t>> stack{{a, b}};
  while (!stack.empty()) {
    auto [p, q] = stack.back();
    stack.pop_back();
    if (p == q) continue;
    for (std::size_t i = 0; i < k_; ++i)
      if (out_of(p, static_cast<Letter>(i)) != out_of(q, static_cast<Letter>(i))) return false;
    for (std::size_t i = 0; i < k_; ++i) {
      std::pair<std::uint64_t, std::uint64_t> nxt{next_of(p, static_cast<Letter>(i)),
                                                   next_of(q, static_cast<Letter>(i))};
      if (seen.insert(nxt).second) stack.push_back(nxt);
    }
  }
  return true;
}

StateId GermAlgebra::add_row(Row row) {
  StateId id = static_cast<StateId>(rows_.size());
  by_output_[row.out].push_back(id);
  rows_.push_back(std::move(row));
  base_.push_back(false);
  return id;
}

std::vector<StateId> GermAlgebra::insert_temps(const std::vector<TempRow>& temps) {
  constexpr StateId kNone = ~StateId{0};
  const std::size_t T = temps.size();
  std::vector<StateId> mapped(T, kNone);

  // match against existing (minimal) states
  for (std::size_t t = 0; t < T; ++t) {
    auto it = by_output_.find(temps[t].out);
    if (it == by_output_.end()) continue;
    for (StateId u : it->second)
      if (temp_bisimilar(temps, kTempBase + t, u)) {
        mapped[t] = u;
        break;
      }
  }

  // Moore refinement among the unmatched temporaries
  std::vector<std::size_t> unmatched;
  for (std::size_t t = 0; t < T; ++t)
    if (mapped[t] == kNone) unmatched.push_back(t);
  if (unmatched.empty()) return mapped;

  std::vector<std::int64_t> cls(T, -1);
  {
    std::map<std::vector<Letter>, std::int64_t> initial;
    for (auto t : unmatched) {
      auto [it, _] = initial.emplace(temps[t].out, static_cast<std::int64_t>(initial.size()));
      cls[t] = it->second;
    }
  }
  std::size_t nclasses = 0;
  for (;;) {
    std::map<std::vector<std::int64_t>, std::int64_t> sigs;
    std::vector<std::int64_t> next_cls(T, -1);
    for (auto t : unmatched) {
      std::vector<std::int64_t> sig{cls[t]};
      for (std::uint64_t n : temps[t].next) {
        if (n >= kTempBase) {
          auto idx = n - kTempBase;
          if (mapped[idx] != kNone)
            sig.push_back(static_cast<std::int64_t>(mapped[idx]));
          else
            sig.push_back(-1 - cls[idx]);
        } else {
          sig.push_back(static_cast<std::int64_t>(n));
        }
      }
      auto [it, _] = sigs.emplace(std::move(sig), static_cast<std::int64_t>(sigs.size()));
      next_cls[t] = it->second;
    }
    cls = std::move(next_cls);
    if (sigs.size() == nclasses) break;
    nclasses = sigs.size();
  }

  const StateId first_new = static_cast<StateId>(rows_.size());
  std::vector<std::size_t> representative(nclasses, T);
  for (auto t : unmatched)
    if (representative[cls[t]] == T) representative[cls[t]] = t;
  for (std::size_t c = 0; c < nclasses; ++c) {
    const auto& tr = temps[representative[c]];
    Row row;
    row.out = tr.out;
    for (std::uint64_t n : tr.next) {
      if (n >= kTempBase) {
        auto idx = n - kTempBase;
        row.next.push_back(mapped[idx] != kNone ? mapped[idx] : first_new + static_cast<StateId>(cls[idx]));
      } else {
        row.next.push_back(static_cast<StateId>(n));
      }
    }
    add_row(std::move(row));
  }
  for (auto t : unmatched) mapped[t] = first_new + static_cast<StateId>(cls[t]);
  return mapped;
}

StateId GermAlgebra::compose(StateId g1, StateId g2) {
  std::lock_guard lock(mu_);
  return compose_locked(g1, g2);
}

StateId GermAlgebra::compose_locked(StateId g1, StateId g2) {
  if (g1 == kIdentity) return g2;
  if (g2 == kIdentity) return g1;
  auto key = [](StateId a, StateId b) { return (std::uint64_t{a} << 32) | b; };
  if (auto it = compose_memo_.find(key(g1, g2)); it != compose_memo_.end()) return it->second;

  std::vector<TempRow> temps;
  std::vector<std::pair<StateId, StateId>> pairs;
  std::map<std::pair<StateId, StateId>, std::size_t> index;
  auto resolve = [&](StateId p, StateId q) -> std::uint64_t {
    if (p == kIdentity) return q;
    if (q == kIdentity) return p;
    if (auto it = compose_memo_.find(key(p, q)); it != compose_memo_.end()) return it->second;
    auto [it, fresh] = index.emplace(std::make_pair(p, q), pairs.size());
    if (fresh) {
      if (pairs.size() >= bound_)
        throw GermBoundExceeded("composition needs more than " + std::to_string(bound_) + " automaton states");
      pairs.push_back({p, q});
    }
    return kTempBase + it->second;
  };
  resolve(g1, g2);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    auto [p, q] = pairs[i];
    TempRow row;
    for (std::size_t xi = 0; xi < k_; ++xi) {
      const Letter x = static_cast<Letter>(xi);
      const Letter y = output_locked(q, x);
      row.out.push_back(output_locked(p, y));
      row.next.push_back(resolve(next_locked(p, y), next_locked(q, x)));
    }
    temps.push_back(std::move(row));
  }
  auto ids = insert_temps(temps);
  for (std::size_t i = 0; i < pairs.size(); ++i) compose_memo_[key(pairs[i].first, pairs[i].second)] = ids[i];
  return ids[0];
}

StateId GermAlgebra::inverse(StateId g) {
  std::lock_guard lock(mu_);
  return inverse_locked(g);
}

StateId GermAlgebra::inverse_locked(StateId g) {
  if (g == kIdentity) return g;
  if (auto it = inverse_memo_.find(g); it != inverse_memo_.end()) return it->second;
  std::vector<StateId> states;
  std::map<StateId, std::size_t> index;
  auto resolve = [&](StateId s) -> std::uint64_t {
    if (s == kIdentity) return kIdentity;
    if (auto it = inverse_memo_.find(s); it != inverse_memo_.end()) return it->second;
    auto [it, fresh] = index.emplace(s, states.size());
    if (fresh) {
      if (states.size() >= bound_)
        throw GermBoundExceeded("inversion needs more than " + std::to_string(bound_) + " automaton states");
      states.push_back(s);
    }
    return kTempBase + it->second;
  };
  resolve(g);
  std::vector<TempRow> temps;
  for (std::size_t i = 0; i < states.size(); ++i) {
    const StateId s = states[i];
    TempRow row;
    row.out.assign(k_, 0);
    row.next.assign(k_, 0);
    for (std::size_t xi = 0; xi < k_; ++xi) {
      const Letter x = static_cast<Letter>(xi);
      const Letter y = output_locked(s, x);
      row.out[y] = x;
      row.next[y] = resolve(next_locked(s, x));
    }
    temps.push_back(std::move(row));
  }
  auto ids = insert_temps(temps);
  for (std::size_t i = 0; i < states.size(); ++i) {
    inverse_memo_[states[i]] = ids[i];
    inverse_memo_[ids[i]] = states[i];
  }
  return ids[0];
}

std::map<std::string, StateId> GermAlgebra::add_automaton(const AutomatonSpec& spec, const SequenceSpace& space) {
  std::lock_guard lock(mu_);
  if (k_ == 0 || space.kind() != SequenceSpace::Kind::full_shift)
    throw Error("automaton '" + spec.name + "': germ automata are supported on full shifts only");
  std::map<std::string, std::size_t> idx;
  for (const auto& st : spec.states) {
    if (st.name == "id" || st.name == "1") throw Error("state name '" + st.name + "' is reserved");
    if (!idx.emplace(st.name, idx.size()).second) throw Error("duplicate state '" + st.name + "'");
    if (by_name_.count(st.name)) throw Error("state name '" + st.name + "' already declared");
  }
  std::vector<TempRow> temps;
  for (const auto& st : spec.states) {
    TempRow row;
    row.out.assign(k_, 0);
    row.next.assign(k_, 0);
    std::vector<bool> seen_on(k_, false), seen_out(k_, false);
    for (const auto& tr : st.transitions) {
      const Letter on = space.letter_index(0, tr.on);
      const Letter out = space.letter_index(0, tr.out);
      if (seen_on[on]) throw Error("state '" + st.name + "' has two transitions on '" + tr.on + "'");
      if (seen_out[out]) throw Error("state '" + st.name + "' is not invertible: output '" + tr.out + "' repeats");
      seen_on[on] = seen_out[out] = true;
      row.out[on] = out;
      if (tr.to == "id" || tr.to == "1") {
        row.next[on] = kIdentity;
      } else {
        auto it = idx.find(tr.to);
        if (it == idx.end()) throw Error("state '" + st.name + "' refers to unknown state '" + tr.to + "'");
        row.next[on] = kTempBase + it->second;
      }
    }
    if (std::find(seen_on.begin(), seen_on.end(), false) != seen_on.end())
      throw Error("state '" + st.name + "' is missing transitions");
    temps.push_back(std::move(row));
  }
  auto ids = insert_temps(temps);
  std::map<std::string, StateId> result;
  for (const auto& st : spec.states) {
    StateId s = ids[idx[st.name]];
    result[st.name] = s;
    base_[s] = true;
    names_.emplace(s, st.name);
    by_name_[st.name] = s;
  }
  for (const auto& st : spec.states) {
    StateId inv = inverse_locked(result[st.name]);
    base_[inv] = true;
    names_.emplace(inv, st.name + "^-1");
    by_name_[st.name + "^-1"] = inv;
  }
  // base closure must be residual-closed; inverses of residuals are already registered
  return result;
}

}  // namespace tfg
