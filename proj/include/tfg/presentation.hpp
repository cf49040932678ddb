#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tfg/expansivity.hpp"
#include "tfg/quasicrystal.hpp"

namespace tfg {

inline constexpr int kSchemaVersion = 1;

/// Regression check stored with a presentation.
///   equal:      two element expressions are equal
///   table:      an element expression prints as the given table text
///   not_equal:  two element expressions differ
///   identity:   an element expression is the identity
struct StoredCheck {
  std::string kind;
  std::vector<std::string> args;
  std::string note;
};

struct LocalRuleSpec {
  double radius = 0;
  std::string pattern;
  std::size_t cycle = 0;
};

struct QuasicrystalSpec {
  CutProjectParams params;
  double lo = 0;
  double hi = 0;
  std::optional<LocalRuleSpec> rule;
};

/// Loaded and validated presentation file. Every table, element, multisection
/// and cover is checked on load.
struct Presentation {
  std::string name;
  std::string origin;  // file path or "<string>"
  GroupoidPtr groupoid;
  std::vector<NamedBisection> bisections;  // declaration order
  std::vector<NamedBisection> basic;
  std::vector<std::pair<std::string, FullGroupElement>> elements;
  std::vector<std::pair<std::string, Multisection>> multisections;
  std::vector<std::pair<std::string, std::vector<std::string>>> covers;
  std::vector<StoredCheck> checks;
  std::optional<QuasicrystalSpec> quasicrystal;

  const Bisection* bisection(const std::string& name) const;
  const FullGroupElement* element(const std::string& name) const;
  const Multisection* multisection(const std::string& name) const;
  /// Symmetric cover built from a named cover (or from the basic bisections for "basic").
  LabeledCover cover(const std::string& name) const;
};

/// Throws Error("<origin>: <path>: <reason>") on malformed or inconsistent input.
Presentation parse_presentation(const std::string& text, const std::string& origin = "<string>");
Presentation load_presentation(const std::string& path);

/// Directory of the bundled presentations.
std::string data_dir();

}  // namespace tfg
