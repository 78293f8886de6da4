#include "siwkb/numerics.hpp"

#include <algorithm>
#include <cmath>

namespace siwkb {

std::pair<double, double> quadratic_roots(double c2, double c1, double c0) {
  double disc = c1 * c1 - 4.0 * c2 * c0;
  const double scale = c1 * c1 + std::abs(4.0 * c2 * c0);
  if (disc < 0.0) {
    if (disc > -1e-14 * scale) {
      disc = 0.0;
    } else {
      throw ValidationError("turning-point quadratic has a negative discriminant");
    }
  }
  if (c2 == 0.0) {
    if (c1 == 0.0) throw ValidationError("turning-point quadratic is degenerate");
    const double t = -c0 / c1;
    return {t, t};
  }
  const double q = -0.5 * (c1 + std::copysign(std::sqrt(disc), c1));
  double t1, t2;
  if (q == 0.0) {
    t1 = t2 = 0.0;
  } else {
    t1 = q / c2;
    t2 = c0 / q;
  }
  return {std::min(t1, t2), std::max(t1, t2)};
}

}  // namespace siwkb
