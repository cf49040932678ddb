#include "tfg/zphi.hpp"

#include <cmath>

namespace tfg {

int ZPhi::sign() const {
  // a + bφ = (p + q√5) / 2 with p = 2a + b, q = b
  const __int128 p = 2 * static_cast<__int128>(a) + b;
  const __int128 q = b;
  if (p >= 0 && q >= 0) return (p == 0 && q == 0) ? 0 : 1;
  if (p <= 0 && q <= 0) return -1;
  const __int128 p2 = p * p;
  const __int128 q2 = 5 * q * q;
  if (p > 0) return p2 > q2 ? 1 : -1;  // p2 == q2 is impossible for q != 0
  return q2 > p2 ? 1 : -1;
}

double ZPhi::to_double() const {
  static const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  return static_cast<double>(a) + static_cast<double>(b) * phi;
}

std::string ZPhi::to_string() const {
  if (b == 0) return std::to_string(a);
  std::string out;
  if (a != 0) out = std::to_string(a) + (b > 0 ? "+" : "-");
  else if (b < 0) out = "-";
  const auto mb = b < 0 ? -b : b;
  if (mb != 1) out += std::to_string(mb);
  return out + "φ";
}

}  // namespace tfg
