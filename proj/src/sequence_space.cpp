#include "tfg/sequence_space.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace tfg {

namespace {

std::vector<Letter> iota_letters(std::size_t n) {
  std::vector<Letter> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<Letter>(i);
  return out;
}

bool all_single_char(const std::vector<std::string>& names) {
  return std::all_of(names.begin(), names.end(), [](const std::string& s) { return s.size() == 1; });
}

std::size_t find_name(const std::vector<std::string>& names, std::string_view name) {
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) throw Error("unknown letter '" + std::string(name) + "'");
  return static_cast<std::size_t>(it - names.begin());
}

void check_alphabet(const std::vector<std::string>& alphabet) {
  if (alphabet.empty()) throw Error("empty alphabet");
  if (alphabet.size() > 0xFFFF) throw Error("alphabet too large");
  std::vector<std::string> sorted = alphabet;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw Error("duplicate letter in alphabet");
  for (const auto& s : alphabet)
    if (s.empty() || s.find('.') != std::string::npos)
      throw Error("letter names must be non-empty and must not contain '.'");
}

}  // namespace

std::shared_ptr<const SequenceSpace> SequenceSpace::full_shift(std::vector<std::string> alphabet) {
  check_alphabet(alphabet);
  std::shared_ptr<SequenceSpace> s(new SequenceSpace());
  s->kind_ = Kind::full_shift;
  Level lv;
  const std::size_t n = alphabet.size();
  lv.successors_of.assign(n, iota_letters(n));
  lv.names = std::move(alphabet);
  s->compact_names_ = all_single_char(lv.names);
  s->first_letters_ = iota_letters(n);
  s->levels_.push_back(std::move(lv));
  return s;
}

std::shared_ptr<const SequenceSpace> SequenceSpace::sft(
    std::vector<std::string> alphabet,
    const std::vector<std::pair<std::string, std::string>>& allowed) {
  check_alphabet(alphabet);
  std::shared_ptr<SequenceSpace> s(new SequenceSpace());
  s->kind_ = Kind::sft;
  Level lv;
  const std::size_t n = alphabet.size();
  lv.successors_of.assign(n, {});
  for (const auto& [a, b] : allowed) {
    auto ia = find_name(alphabet, a);
    auto ib = find_name(alphabet, b);
    lv.successors_of[ia].push_back(static_cast<Letter>(ib));
  }
  for (auto& succ : lv.successors_of) {
    std::sort(succ.begin(), succ.end());
    succ.erase(std::unique(succ.begin(), succ.end()), succ.end());
  }
  lv.names = std::move(alphabet);
  s->compact_names_ = all_single_char(lv.names);
  s->first_letters_ = iota_letters(n);
  s->levels_.push_back(std::move(lv));
  s->check_no_dead_ends();
  return s;
}

std::shared_ptr<const SequenceSpace> SequenceSpace::bratteli(
    std::vector<std::vector<std::string>> vertices,
    std::vector<std::vector<BratteliEdge>> edges) {
  if (edges.empty()) throw Error("Bratteli diagram needs at least one edge level");
  if (vertices.size() != edges.size() + 1)
    throw Error("Bratteli diagram needs one more vertex level than edge levels");
  const std::size_t L = edges.size();
  if (L >= 2 && vertices[L].size() != vertices[L - 1].size())
    throw Error("stationary continuation requires the last two vertex levels to match");
  if (L == 1 && vertices[1].size() != vertices[0].size())
    throw Error("stationary continuation requires the last two vertex levels to match");

  std::shared_ptr<SequenceSpace> s(new SequenceSpace());
  s->kind_ = Kind::bratteli;
  bool compact = true;
  for (std::size_t n = 0; n < L; ++n) {
    std::vector<std::string> names;
    for (const auto& e : edges[n]) names.push_back(e.name);
    check_alphabet(names);
    compact = compact && all_single_char(names);
    // surjectivity of source and range maps
    std::vector<bool> hit_src(vertices[n].size(), false), hit_dst(vertices[n + 1].size(), false);
    for (const auto& e : edges[n]) {
      if (e.src >= vertices[n].size() || e.dst >= vertices[n + 1].size())
        throw Error("Bratteli edge '" + e.name + "' references a missing vertex");
      hit_src[e.src] = true;
      hit_dst[e.dst] = true;
    }
    if (std::find(hit_src.begin(), hit_src.end(), false) != hit_src.end())
      throw Error("Bratteli source map is not surjective at level " + std::to_string(n + 1));
    if (std::find(hit_dst.begin(), hit_dst.end(), false) != hit_dst.end())
      throw Error("Bratteli range map is not surjective at level " + std::to_string(n + 1));
    Level lv;
    lv.names = std::move(names);
    for (const auto& e : edges[n]) lv.end_vertex.push_back(e.dst);
    s->levels_.push_back(std::move(lv));
  }
  for (std::size_t n = 0; n < L; ++n) {
    const auto& next_edges = edges[std::min(n + 1, L - 1)];
    auto& lv = s->levels_[n];
    lv.successors_of.assign(edges[n].size(), {});
    for (std::size_t a = 0; a < edges[n].size(); ++a)
      for (std::size_t b = 0; b < next_edges.size(); ++b)
        if (next_edges[b].src == edges[n][a].dst) lv.successors_of[a].push_back(static_cast<Letter>(b));
  }
  s->compact_names_ = compact;
  s->first_letters_ = iota_letters(edges[0].size());
  s->check_no_dead_ends();
  return s;
}

const SequenceSpace::Level& SequenceSpace::level(std::size_t n) const {
  return levels_[std::min(n, levels_.size() - 1)];
}

void SequenceSpace::check_no_dead_ends() const {
  for (std::size_t n = 0; n < levels_.size(); ++n)
    for (std::size_t a = 0; a < levels_[n].successors_of.size(); ++a)
      if (levels_[n].successors_of[a].empty())
        throw Error("letter '" + levels_[n].names[a] + "' has no allowed successor");
}

std::size_t SequenceSpace::alphabet_size(std::size_t n) const { return level(n).names.size(); }

const std::string& SequenceSpace::letter_name(std::size_t n, Letter x) const {
  return level(n).names.at(x);
}

Letter SequenceSpace::letter_index(std::size_t n, std::string_view name) const {
  return static_cast<Letter>(find_name(level(n).names, name));
}

bool SequenceSpace::allowed(std::size_t n, Letter a, Letter b) const {
  const auto& succ = level(n).successors_of.at(a);
  return std::binary_search(succ.begin(), succ.end(), b);
}

const std::vector<Letter>& SequenceSpace::successors(const Word& w) const {
  if (w.empty()) return first_letters_;
  return level(w.size() - 1).successors_of.at(w.back());
}

bool SequenceSpace::valid(const Word& w) const {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] >= alphabet_size(i)) return false;
    if (i > 0 && !allowed(i - 1, w[i - 1], w[i])) return false;
  }
  return true;
}

bool SequenceSpace::tail_compatible(const Word& v, const Word& u) const {
  if (kind_ == Kind::bratteli) {
    if (v.size() != u.size()) return false;
    if (v.empty()) return true;
    return level(v.size() - 1).end_vertex.at(v.back()) == level(u.size() - 1).end_vertex.at(u.back());
  }
  return successors(v) == successors(u);
}

std::vector<Word> SequenceSpace::words_of_length(std::size_t n) const {
  std::vector<Word> cur{Word()};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Word> next;
    for (const auto& w : cur)
      for (Letter x : successors(w)) next.push_back(w + x);
    cur = std::move(next);
  }
  return cur;
}

std::string SequenceSpace::format(const Word& w) const {
  if (w.empty()) return "";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!compact_names_ && i > 0) out += '.';
    out += letter_name(i, w[i]);
  }
  return out;
}

Word SequenceSpace::parse(std::string_view text) const {
  Word w;
  if (text.empty() || text == "e" || text == "ε") return w;
  if (compact_names_) {
    for (std::size_t i = 0; i < text.size(); ++i) w.push_back(letter_index(i, text.substr(i, 1)));
  } else {
    std::size_t start = 0;
    while (start <= text.size()) {
      auto dot = text.find('.', start);
      auto piece = text.substr(start, dot == std::string_view::npos ? std::string_view::npos : dot - start);
      w.push_back(letter_index(w.size(), piece));
      if (dot == std::string_view::npos) break;
      start = dot + 1;
    }
  }
  if (!valid(w)) throw Error("word '" + std::string(text) + "' is not an allowed prefix");
  return w;
}

std::string SequenceSpace::describe() const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::full_shift: os << "full shift on " << levels_[0].names.size() << " letters"; break;
    case Kind::sft: os << "SFT on " << levels_[0].names.size() << " letters"; break;
    case Kind::bratteli: os << "Bratteli path space with " << levels_.size() << " edge levels"; break;
  }
  return os.str();
}

}  // namespace tfg
