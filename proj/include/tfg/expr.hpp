#pragma once

#include <optional>
#include <string>

#include "tfg/presentation.hpp"

namespace tfg {

/// Element expressions over a presentation:
///
///   expr   := term ('*' term)*          g*h applies h first
///   term   := atom ('^' '-'? integer)?
///   atom   := name | 'id' | '(' expr ')' | '[' expr ',' expr ']' | 'tau' '(' name ')'
///
/// Names resolve to elements, then to bisections whose source and range are
/// the whole space. [g,h] = g^-1 h^-1 g h; tau(F) swaps s(F) and r(F).
FullGroupElement evaluate(const std::string& text, const Presentation& p);

struct Evaluation {
  std::optional<FullGroupElement> element;
  std::optional<bool> truth;  // for "a == b" and "a != b"
};
Evaluation eval(const std::string& text, const Presentation& p);

}  // namespace tfg
