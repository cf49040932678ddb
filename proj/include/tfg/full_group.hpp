#pragma once

#include <string>

#include "tfg/bisection.hpp"

namespace tfg {

/// Element of the topological full group: a bisection whose source and
/// range are the whole unit space. Partial tables are rejected.
class FullGroupElement {
 public:
  FullGroupElement() = default;
  explicit FullGroupElement(Bisection table);

  static FullGroupElement identity(const GroupoidPtr& groupoid);

  const Bisection& table() const { return table_; }
  const GroupoidPtr& groupoid() const { return table_.groupoid(); }

  bool is_identity() const { return table_.is_identity(); }
  bool equals(const FullGroupElement& other) const { return table_.equals(other.table_); }
  std::string key() const { return table_.key(); }
  std::string to_string() const { return table_.to_string(); }

 private:
  Bisection table_;
};

/// g·h applies h first.
FullGroupElement multiply(const FullGroupElement& g, const FullGroupElement& h);
FullGroupElement invert(const FullGroupElement& g);
/// k⁻¹ g k.
FullGroupElement conjugate(const FullGroupElement& g, const FullGroupElement& k);
/// g⁻¹ h⁻¹ g h.
FullGroupElement commutator(const FullGroupElement& g, const FullGroupElement& h);

/// Clopen set of cylinders on which the germs are not units. For automaton
/// labels whose fixed-point set is not clopen, the smallest clopen set
/// containing the non-unit germs found along the residual tree is returned.
ClopenSet support(const FullGroupElement& g);

/// F ∪ F⁻¹ ∪ identity on the rest; requires disjoint source and range.
FullGroupElement tau(const Bisection& f);

}  // namespace tfg
