#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace tfg {

/// Exact element a + bφ of Z[φ], φ² = φ + 1.
struct ZPhi {
  std::int64_t a = 0;
  std::int64_t b = 0;

  static constexpr ZPhi phi() { return {0, 1}; }

  friend constexpr ZPhi operator+(ZPhi x, ZPhi y) { return {x.a + y.a, x.b + y.b}; }
  friend constexpr ZPhi operator-(ZPhi x, ZPhi y) { return {x.a - y.a, x.b - y.b}; }
  friend constexpr ZPhi operator-(ZPhi x) { return {-x.a, -x.b}; }
  friend constexpr ZPhi operator*(ZPhi x, ZPhi y) {
    // (a + bφ)(c + dφ) = ac + bd + (ad + bc + bd)φ
    return {x.a * y.a + x.b * y.b, x.a * y.b + x.b * y.a + x.b * y.b};
  }
  friend constexpr bool operator==(ZPhi, ZPhi) = default;

  /// Galois conjugate φ -> 1 - φ.
  constexpr ZPhi star() const { return {a + b, -b}; }
  /// Sign of the real number, exactly.
  int sign() const;
  double to_double() const;
  std::string to_string() const;

  friend std::strong_ordering operator<=>(ZPhi x, ZPhi y) {
    const int s = (x - y).sign();
    return s < 0 ? std::strong_ordering::less : s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }
};

}  // namespace tfg
