#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <utility>

#include "siwkb/errors.hpp"

namespace siwkb {

/// Root of f on [lo, hi] given f(lo), f(hi) of opposite sign. Secant steps
/// are taken from the bracket ends and rejected in favour of bisection when
/// they leave the bracket or stop shrinking it quickly enough.
template <class F>
double find_root(F&& f, double lo, double hi, double flo, double fhi, double xtol,
                 int max_iter = 400) {
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0.0) == (fhi > 0.0)) throw BracketError("find_root: endpoints do not bracket a root");
  bool bisect_next = false;
  for (int it = 0; it < max_iter; ++it) {
    const double width = hi - lo;
    if (std::abs(width) <= xtol) break;
    double x;
    if (bisect_next) {
      x = lo + 0.5 * width;
      bisect_next = false;
    } else {
      x = hi - fhi * (hi - lo) / (fhi - flo);
      const double guard = 1e-3 * std::abs(width);
      const double a = std::min(lo, hi), b = std::max(lo, hi);
      if (!(x > a + guard && x < b - guard)) x = lo + 0.5 * width;
    }
    const double fx = f(x);
    if (fx == 0.0) return x;
    const double old = std::abs(width);
    if ((fx > 0.0) == (flo > 0.0)) {
      lo = x;
      flo = fx;
    } else {
      hi = x;
      fhi = fx;
    }
    // a secant step that kept one end pinned gets followed by a bisection
    if (std::abs(hi - lo) > 0.5 * old) bisect_next = true;
  }
  return std::abs(flo) < std::abs(fhi) ? lo : hi;
}

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int nodes = 0;
};

/// Integral of g over [L, R] through x = mid + half cos(theta) and the
/// midpoint rule in theta. Square-root zeros at both ends become smooth and
/// even in theta, so the rule converges geometrically; no node touches an
/// endpoint. Node count doubles from n0 until successive values differ by at
/// most `tol`.
template <class G>
QuadratureResult integrate_cosine_map(G&& g, double L, double R, double tol, int n0 = 64,
                                      int n_max = 1 << 16) {
  const double mid = 0.5 * (L + R);
  const double half = 0.5 * (R - L);
  auto rule = [&](int n) {
    const double h = std::numbers::pi / n;
    double sum = 0.0;
    for (int k = 0; k < n; ++k) {
      const double theta = (k + 0.5) * h;
      sum += g(mid + half * std::cos(theta)) * std::sin(theta);
    }
    return sum * h * half;
  };
  int n = n0;
  double prev = rule(n);
  while (2 * n <= n_max) {
    const double next = rule(2 * n);
    const double diff = std::abs(next - prev);
    if (diff <= tol) return {next, diff, 2 * n};
    prev = next;
    n *= 2;
  }
  throw ConvergenceError("cosine-map quadrature did not converge within the node cap");
}

/// Roots t1 <= t2 of c2 t^2 + c1 t + c0 = 0 by the cancellation-free formula.
/// Throws ValidationError on a negative discriminant.
std::pair<double, double> quadratic_roots(double c2, double c1, double c0);

}  // namespace siwkb
