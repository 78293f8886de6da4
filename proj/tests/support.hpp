#pragma once

// Independent reference machinery for the tests: Boost root finding and
// tanh-sinh quadrature, sharing nothing with the library's own solvers.

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/tools/roots.hpp>

#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <utility>

namespace testing {

inline double brent_root(const std::function<double(double)>& g, double lo, double hi) {
  std::uintmax_t iters = 200;
  auto tol = boost::math::tools::eps_tolerance<double>(52);
  const auto [a, b] = boost::math::tools::toms748_solve(g, lo, hi, tol, iters);
  return 0.5 * (a + b);
}

/// \int_lo^hi sqrt(max(0, E - V(x))) dx with tanh-sinh, which tolerates the
/// square-root endpoint behaviour.
inline double sqrt_action(const std::function<double(double)>& V, double E, double lo, double hi) {
  boost::math::quadrature::tanh_sinh<double> q;
  auto integrand = [&](double x) {
    const double d = E - V(x);
    return d > 0.0 ? std::sqrt(d) : 0.0;
  };
  return q.integrate(integrand, lo, hi, 1e-14);
}

/// Outermost sign changes of E - V on a fine scan of [lo, hi], refined.
inline std::pair<double, double> scan_turning_points(const std::function<double(double)>& V, double E,
                                                     double lo, double hi, int samples = 200000) {
  double left = std::numeric_limits<double>::quiet_NaN(), right = left;
  double xp = lo, gp = E - V(lo);
  auto g = [&](double x) { return E - V(x); };
  for (int i = 1; i <= samples; ++i) {
    const double x = lo + (hi - lo) * i / samples;
    const double gx = g(x);
    if (gp <= 0.0 && gx > 0.0 && std::isnan(left)) left = brent_root(g, xp, x);
    if (gp > 0.0 && gx <= 0.0) right = brent_root(g, xp, x);
    xp = x;
    gp = gx;
  }
  return {left, right};
}

}  // namespace testing
