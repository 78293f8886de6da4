#include "siwkb/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "siwkb/errors.hpp"
#include "siwkb/quantize.hpp"

namespace siwkb::oracle {

namespace {

constexpr double big = 1e200;

// Grid variable y with x = X(y). Singular edges are pushed to y = -inf or
// +inf, and the Liouville substitution psi = sqrt(X') u turns
// -hbar^2 psi'' + (V - E) psi = 0 into u'' = (X'^2 (V - E) / hbar^2 - S/2) u,
// S the Schwarzian of X. Near a singular edge the coefficient tends to
// (k/hbar - 1/2)^2, so u decays exponentially in y and a Dirichlet start
// deep in the tail selects the regular solution.
//   half line:  X = L + c log(1 + e^y)   (logarithmic at the edge, linear far out)
//   interval:   X = L + D / (1 + e^-y)
struct Map {
  enum Kind { linear, softplus, logistic } kind = linear;
  double L = 0.0, D = 1.0;

  static double sigmoid(double y) {
    return y >= 0.0 ? 1.0 / (1.0 + std::exp(-y)) : std::exp(y) / (1.0 + std::exp(y));
  }
  double x(double y) const {
    switch (kind) {
      case linear: return y;
      case softplus: return L + D * (std::max(y, 0.0) + std::log1p(std::exp(-std::abs(y))));
      case logistic: return L + D * sigmoid(y);
    }
    return y;
  }
  double dx(double y) const {
    switch (kind) {
      case linear: return 1.0;
      case softplus: return D * sigmoid(y);
      case logistic: {
        const double e = std::exp(-std::abs(y));
        return D * e / ((1.0 + e) * (1.0 + e));
      }
    }
    return 1.0;
  }
  double schwarzian(double y) const {
    switch (kind) {
      case linear: return 0.0;
      case softplus: {
        const double s = sigmoid(y);
        return -0.5 * (1.0 - s) * (1.0 + s);
      }
      case logistic: return -0.5;
    }
    return 0.0;
  }
  double y(double x) const {
    switch (kind) {
      case linear: return x;
      case softplus: {
        const double t = (x - L) / D;
        return t > 30.0 ? t + std::log1p(-std::exp(-t)) : std::log(std::expm1(t));
      }
      case logistic: return std::log((x - L) / (L + D - x));
    }
    return x;
  }
};

// The half-line map's length scale is the edge-to-well distance.
Map map_for(Family f, double x_well) {
  const auto& d = info(f).domain;
  Map m;
  if (d.singular_left && d.singular_right) {
    m.kind = Map::logistic;
    m.L = d.left;
    m.D = d.right - d.left;
  } else if (d.singular_left) {
    m.kind = Map::softplus;
    m.L = d.left;
    m.D = x_well - d.left;
  }
  return m;
}

struct Grid {
  int N = 0;
  double y0 = 0.0, h = 0.0;
  Map map;
  std::vector<double> a, b;  // u'' = (b - a E) u
  int m = 0;

  double y(int j) const { return y0 + j * h; }
};

Grid build_grid(Family f, const ParamSet& p, const SolverConfig& cfg, int N) {
  Grid g;
  g.N = N;
  g.map = map_for(f, cfg.match_point);
  g.y0 = g.map.y(cfg.box_left);
  g.h = (g.map.y(cfg.box_right) - g.y0) / (N - 1);
  g.a.resize(static_cast<std::size_t>(N));
  g.b.resize(static_cast<std::size_t>(N));
  const double ih2 = 1.0 / (p.hbar * p.hbar);
  for (int j = 0; j < N; ++j) {
    const double yj = g.y(j);
    const double xp = g.map.dx(yj);
    const double v = potential_minus(f, p, g.map.x(yj));
    const auto J = static_cast<std::size_t>(j);
    g.a[J] = xp * xp * ih2;
    g.b[J] = g.a[J] * v - 0.5 * g.map.schwarzian(yj);
  }
  const int m = static_cast<int>(std::lround((g.map.y(cfg.match_point) - g.y0) / g.h));
  g.m = std::clamp(m, 2, N - 4);
  return g;
}

// Numerov from the left end through index `last`; u has size N.
void shoot_left(const Grid& g, double E, int last, std::vector<double>& u) {
  u.assign(static_cast<std::size_t>(g.N), 0.0);
  const double c = g.h * g.h / 12.0;
  auto w = [&](int j) {
    const auto J = static_cast<std::size_t>(j);
    return 1.0 - c * (g.b[J] - g.a[J] * E);
  };
  u[1] = 1e-30;
  double wm = w(0), w0 = w(1);
  for (int j = 1; j < last; ++j) {
    const double wp = w(j + 1);
    const auto J = static_cast<std::size_t>(j);
    u[J + 1] = ((12.0 - 10.0 * w0) * u[J] - wm * u[J - 1]) / wp;
    if (std::abs(u[J + 1]) > big) {
      for (int i = 0; i <= j + 1; ++i) u[static_cast<std::size_t>(i)] /= big;
    }
    wm = w0;
    w0 = wp;
  }
}

// Numerov from the right end down through index `first`.
void shoot_right(const Grid& g, double E, int first, std::vector<double>& u) {
  u.assign(static_cast<std::size_t>(g.N), 0.0);
  const double c = g.h * g.h / 12.0;
  auto w = [&](int j) {
    const auto J = static_cast<std::size_t>(j);
    return 1.0 - c * (g.b[J] - g.a[J] * E);
  };
  const int top = g.N - 1;
  u[static_cast<std::size_t>(top - 1)] = 1e-30;
  double wp = w(top), w0 = w(top - 1);
  for (int j = top - 1; j > first; --j) {
    const double wm = w(j - 1);
    const auto J = static_cast<std::size_t>(j);
    u[J - 1] = ((12.0 - 10.0 * w0) * u[J] - wp * u[J + 1]) / wm;
    if (std::abs(u[J - 1]) > big) {
      for (int i = j - 1; i <= top; ++i) u[static_cast<std::size_t>(i)] /= big;
    }
    wp = w0;
    w0 = wm;
  }
}

int count_sign_changes(const std::vector<double>& u, int from, int to) {
  int nodes = 0;
  double prev = 0.0;
  for (int j = from; j <= to; ++j) {
    const double v = u[static_cast<std::size_t>(j)];
    if (v == 0.0) continue;
    if (prev != 0.0 && (v > 0.0) != (prev > 0.0)) ++nodes;
    prev = v;
  }
  return nodes;
}

int grid_nodes(const Grid& g, double E, std::vector<double>& buf) {
  shoot_left(g, E, g.N - 1, buf);
  return count_sign_changes(buf, 1, g.N - 2);
}

double mismatch(const Grid& g, double E, std::vector<double>& l, std::vector<double>& r) {
  shoot_left(g, E, g.m + 1, l);
  shoot_right(g, E, g.m, r);
  const auto m = static_cast<std::size_t>(g.m);
  // normalize each side first; the raw product can overflow
  const double ln = std::hypot(l[m], l[m + 1]);
  const double rn = std::hypot(r[m], r[m + 1]);
  if (ln == 0.0 || rn == 0.0) return 0.0;
  return (l[m + 1] / ln) * (r[m] / rn) - (l[m] / ln) * (r[m + 1] / rn);
}

double solve_on_grid(const Grid& g, int n, std::pair<double, double> bracket) {
  std::vector<double> a, b;
  double e1 = bracket.first, e2 = bracket.second;
  int c1 = grid_nodes(g, e1, a);
  int c2 = grid_nodes(g, e2, a);
  for (int t = 0; c1 > n && t < 60; ++t) {
    e1 -= std::max(1.0, e2 - e1);
    c1 = grid_nodes(g, e1, a);
  }
  for (int t = 0; c2 < n + 1 && t < 60; ++t) {
    e2 += std::max(1.0, e2 - e1);
    c2 = grid_nodes(g, e2, a);
  }
  if (c1 > n || c2 < n + 1) throw BracketError("could not bracket level " + std::to_string(n));

  for (int it = 0; !(c1 == n && c2 == n + 1); ++it) {
    if (it > 200) throw BracketError("node count never isolates level " + std::to_string(n));
    const double mid = 0.5 * (e1 + e2);
    const int c = grid_nodes(g, mid, a);
    if (c <= n) {
      e1 = mid;
      c1 = c;
    } else {
      e2 = mid;
      c2 = c;
    }
  }

  double m1 = mismatch(g, e1, a, b);
  const double m2 = mismatch(g, e2, a, b);
  const bool use_nodes = (m1 > 0.0) == (m2 > 0.0);
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (e1 + e2);
    if (mid <= e1 || mid >= e2) break;
    if (use_nodes) {
      if (grid_nodes(g, mid, a) <= n) {
        e1 = mid;
      } else {
        e2 = mid;
      }
    } else {
      const double mm = mismatch(g, mid, a, b);
      if ((mm > 0.0) == (m1 > 0.0)) {
        e1 = mid;
        m1 = mm;
      } else {
        e2 = mid;
      }
    }
  }
  return 0.5 * (e1 + e2);
}

double energy_ceiling(Family f, const ParamSet& p) {
  const auto& dom = info(f).domain;
  double ceiling = std::numeric_limits<double>::infinity();
  auto far = [&](double x) {
    const double v = potential_minus(f, p, x);
    return std::isnan(v) ? std::numeric_limits<double>::infinity() : v;
  };
  if (dom.infinite_right()) ceiling = std::min(ceiling, far(1e6));
  if (dom.infinite_left()) ceiling = std::min(ceiling, far(-1e6));
  return ceiling;
}

// Walk away from the well until the decay integral reaches `margin`.
double walk_edge(Family f, const ParamSet& p, double x_start, double E, double dir, double margin) {
  double x = x_start, acc = 0.0;
  while (acc < margin) {
    const double dx = 1e-3 * (1.0 + std::abs(x - x_start));
    const double xn = x + dir * dx;
    const double v = potential_minus(f, p, xn);
    if (std::isinf(v) || std::isnan(v)) return xn;
    if (v > E) acc += std::sqrt(v - E) / p.hbar * dx;
    x = xn;
    if (std::abs(x - x_start) > 1e7) throw TruncationError("level does not decay within the scan range");
  }
  return x;
}

// Singular edges: stop where the regular solution has fallen by e^-margin
// relative to the well, u ~ d^(k/hbar - 1/2).
double edge_offset(Family f, const ParamSet& p, Endpoint side, double x_min, double margin) {
  const auto& dom = info(f).domain;
  const double edge = side == Endpoint::left ? dom.left : dom.right;
  const double k = singular_coefficient(f, p, side);
  const double rate = std::max(k / p.hbar - 0.5, 0.05);
  const double d = std::abs(x_min - edge) * std::exp(-margin / rate);
  const double floor = map_for(f, x_min).kind == Map::logistic
                           ? 1e-13 * std::max(std::abs(dom.left), std::abs(dom.right))
                           : 1e-300;
  return std::max(d, floor);
}

void size_box(Family f, const ParamSet& p, SolverConfig& cfg, double x_min, double e_box) {
  const auto& dom = info(f).domain;
  const double m = cfg.decay_margin;
  cfg.box_left = dom.singular_left ? dom.left + edge_offset(f, p, Endpoint::left, x_min, m)
                                   : walk_edge(f, p, x_min, e_box, -1.0, m);
  cfg.box_right = dom.singular_right ? dom.right - edge_offset(f, p, Endpoint::right, x_min, m)
                                     : walk_edge(f, p, x_min, e_box, 1.0, m);
}

// Smallest N (at least `N`) that resolves oscillations in the allowed region
// (h sqrt|Q| <= 0.2) and keeps Numerov stable in the forbidden one
// (h sqrt(Q) <= 1.5) across the energy bracket.
int resolved_points(Family f, const ParamSet& p, const SolverConfig& cfg, int N) {
  const Grid g = build_grid(f, p, cfg, N);
  double osc = 0.0, decay = 0.0;
  for (double E : {cfg.energy_bracket.first, cfg.energy_bracket.second}) {
    for (std::size_t j = 0; j < g.a.size(); ++j) {
      const double q = g.b[j] - g.a[j] * E;
      if (!std::isfinite(q)) continue;
      if (q < 0.0) {
        osc = std::max(osc, -q);
      } else {
        decay = std::max(decay, q);
      }
    }
  }
  const double range = g.h * (N - 1);
  const double need = range * std::max(std::sqrt(osc) / 0.2, std::sqrt(decay) / 1.5);
  return std::max(N, static_cast<int>(std::ceil(need)) + 1);
}

double converge_grid(Family f, const ParamSet& p, int n, const SolverConfig& cfg, int* n_used) {
  int N = resolved_points(f, p, cfg, std::max(cfg.grid_points, 2000));
  double prev = solve_on_grid(build_grid(f, p, cfg, N), n, cfg.energy_bracket);
  while (2 * N <= cfg.max_grid_points) {
    N *= 2;
    const double e = solve_on_grid(build_grid(f, p, cfg, N), n, cfg.energy_bracket);
    if (std::abs(e - prev) <= 0.5 * cfg.tolerance) {
      if (n_used) *n_used = N;
      return e;
    }
    prev = e;
  }
  throw ConvergenceError("Numerov eigenvalue did not converge under grid refinement");
}

}  // namespace

SolverConfig default_config(Family f, const ParamSet& p, int n) {
  require_valid(f, p);
  const auto count = bound_state_count(f, p);
  const double en = exact_energy(f, p, n);
  const double ceiling = energy_ceiling(f, p);
  const double next = count.admits(n + 1) ? std::min(exact_energy(f, p, n + 1), ceiling) : ceiling;
  const auto bottom = well_bottom(f, p, SchemeKind::langer_wkb);

  SolverConfig cfg;
  const double e_box = en + 0.5 * (next - en);
  cfg.energy_bracket = {bottom.value, e_box};
  cfg.match_point = bottom.x;
  cfg.tolerance = 1e-7 * (1.0 + std::abs(en));
  size_box(f, p, cfg, bottom.x, e_box);
  return cfg;
}

double eigenvalue(Family f, const ParamSet& p, int n, const SolverConfig& cfg) {
  require_valid(f, p);
  if (!bound_state_count(f, p).admits(n)) {
    throw OutOfSpectrumError("level n = " + std::to_string(n) + " is not bound");
  }
  int N = 0;
  const double e = converge_grid(f, p, n, cfg, &N);

  SolverConfig wide = cfg;
  wide.decay_margin = 2.0 * cfg.decay_margin;
  size_box(f, p, wide, cfg.match_point, cfg.energy_bracket.second);
  const Map map = map_for(f, cfg.match_point);
  const double h = (map.y(cfg.box_right) - map.y(cfg.box_left)) / (N - 1);
  const int wide_n =
      static_cast<int>(std::ceil((map.y(wide.box_right) - map.y(wide.box_left)) / h)) + 1;
  const double e_wide = solve_on_grid(build_grid(f, p, wide, wide_n), n, wide.energy_bracket);
  if (std::abs(e_wide - e) > cfg.tolerance) {
    throw TruncationError("eigenvalue moved by " + std::to_string(std::abs(e_wide - e)) +
                          " when the box margin was doubled");
  }
  return e;
}

double eigenvalue(Family f, const ParamSet& p, int n) {
  return eigenvalue(f, p, n, default_config(f, p, n));
}

int node_count(Family f, const ParamSet& p, double E, const SolverConfig& cfg) {
  require_valid(f, p);
  std::vector<double> buf;
  const int N = resolved_points(f, p, cfg, std::max(cfg.grid_points, 2000));
  return grid_nodes(build_grid(f, p, cfg, N), E, buf);
}

Eigenstate eigenstate(Family f, const ParamSet& p, int n, const SolverConfig& cfg) {
  int N = 0;
  const double e = converge_grid(f, p, n, cfg, &N);
  const Grid g = build_grid(f, p, cfg, N);
  std::vector<double> l, r;
  shoot_left(g, e, g.m + 1, l);
  shoot_right(g, e, g.m, r);
  const auto m = static_cast<std::size_t>(g.m);
  const double scale = r[m] != 0.0 ? l[m] / r[m] : 1.0;
  Eigenstate st;
  st.energy = e;
  for (int j = 1; j < N - 1; ++j) {
    const auto J = static_cast<std::size_t>(j);
    const double yj = g.y(j);
    st.x.push_back(g.map.x(yj));
    st.psi.push_back(std::sqrt(g.map.dx(yj)) * (J <= m ? l[J] : r[J] * scale));
  }
  return st;
}

LogSlope singular_log_slope(Family f, const ParamSet& p, int n, Endpoint side) {
  require_valid(f, p);
  const auto& dom = info(f).domain;
  const bool singular = side == Endpoint::left ? dom.singular_left : dom.singular_right;
  if (!singular) throw UnsupportedError("endpoint is not singular");
  SolverConfig cfg = default_config(f, p, n);
  const double edge = side == Endpoint::left ? dom.left : dom.right;
  // The Dirichlet start mixes in the irregular solution, which decays away
  // from the edge like (start/d)^(2k/hbar - 1) relative to the regular one;
  // push the start far enough below the fit decade to bury it under 1e-10.
  const double rate = singular_coefficient(f, p, side) / p.hbar - 0.5;
  const double reach = std::abs(cfg.match_point - edge);
  const double start =
      reach * 1e-4 * std::exp(-std::log(1e10) / (2.0 * rate)) * 1e-2;
  if (side == Endpoint::left)
    cfg.box_left = std::min(cfg.box_left, edge + start);
  else
    cfg.box_right = std::max(cfg.box_right, edge - start);
  const Eigenstate st = eigenstate(f, p, n, cfg);

  // the decade [1e-4, 1e-3] of the edge-to-well distance
  const double hi_d = 1e-3 * std::abs(cfg.match_point - edge);
  const double lo_d = 0.1 * hi_d;
  std::vector<double> us, slopes;
  const int count = static_cast<int>(st.x.size());
  for (int i = 1; i + 1 < count; ++i) {
    const double d = std::abs(st.x[static_cast<std::size_t>(i)] - edge);
    if (d < lo_d || d > hi_d) continue;
    const auto lo = static_cast<std::size_t>(i - 1), hi = static_cast<std::size_t>(i + 1);
    const double dpsi = std::log(std::abs(st.psi[hi])) - std::log(std::abs(st.psi[lo]));
    const double df = std::log(std::abs(f1_and_derivative(f, p, st.x[hi]).first)) -
                      std::log(std::abs(f1_and_derivative(f, p, st.x[lo]).first));
    us.push_back(d / hi_d);
    slopes.push_back(dpsi / df);
  }
  if (us.size() < 3) throw ConvergenceError("too few grid points near the singular edge");

  // least-squares quadratic in d; the intercept is the d -> 0 slope
  std::array<std::array<double, 4>, 3> a{};
  for (std::size_t i = 0; i < us.size(); ++i) {
    const double basis[3] = {1.0, us[i], us[i] * us[i]};
    for (int r = 0; r < 3; ++r) {
      for (int c = 0; c < 3; ++c) a[r][c] += basis[r] * basis[c];
      a[r][3] += basis[r] * slopes[i];
    }
  }
  for (int c = 0; c < 3; ++c) {
    for (int r = c + 1; r < 3; ++r) {
      const double fac = a[r][c] / a[c][c];
      for (int k = c; k < 4; ++k) a[r][k] -= fac * a[c][k];
    }
  }
  double coef[3];
  for (int r = 2; r >= 0; --r) {
    double s = a[r][3];
    for (int k = r + 1; k < 3; ++k) s -= a[r][k] * coef[k];
    coef[r] = s / a[r][r];
  }
  return {coef[0], -singular_coefficient(f, p, side) / p.hbar};
}

}  // namespace siwkb::oracle
