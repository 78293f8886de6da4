#include "siwkb/quantize.hpp"

#include <algorithm>
#include <boost/math/tools/minima.hpp>
#include <cmath>
#include <limits>
#include <numbers>

#include "siwkb/errors.hpp"
#include "siwkb/numerics.hpp"

namespace siwkb {

namespace {

constexpr double inf = std::numeric_limits<double>::infinity();
constexpr double pi = std::numbers::pi;

double finite_or_inf(double v) { return std::isnan(v) ? inf : v; }

// Fixed geometric scan of the domain, dense near finite ends and reaching
// far out on infinite sides.
std::vector<double> scan_points(const DomainSpec& d) {
  std::vector<double> xs;
  const bool lf = !d.infinite_left(), rf = !d.infinite_right();
  if (lf && rf) {
    const double w = d.right - d.left;
    for (double off = 1e-10 * w; off <= 0.5 * w; off *= 1.05) {
      xs.push_back(d.left + off);
      xs.push_back(d.right - off);
    }
    xs.push_back(d.left + 0.5 * w);
  } else if (lf) {
    for (double off = 1e-10; off <= 1e8; off *= 1.03) xs.push_back(d.left + off);
  } else if (rf) {
    for (double off = 1e-10; off <= 1e8; off *= 1.03) xs.push_back(d.right - off);
  } else {
    xs.push_back(0.0);
    for (double off = 1e-6; off <= 1e6; off *= 1.03) {
      xs.push_back(off);
      xs.push_back(-off);
    }
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

const std::vector<double>& cached_scan(Family f) {
  static const auto table = [] {
    std::array<std::vector<double>, 10> t;
    for (Family g : all_families) t[static_cast<std::size_t>(g)] = scan_points(info(g).domain);
    return t;
  }();
  return table[static_cast<std::size_t>(f)];
}

struct Scan {
  const std::vector<double>* xs;
  std::vector<double> vs;
  std::size_t argmin = 0;
  WellBottom bottom;
};

Scan scan_well(Family f, const ParamSet& p, SchemeKind s) {
  Scan sc;
  sc.xs = &cached_scan(f);
  const auto& xs = *sc.xs;
  sc.vs.resize(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sc.vs[i] = finite_or_inf(effective_potential(f, p, s, xs[i]));
  }
  sc.argmin = static_cast<std::size_t>(std::min_element(sc.vs.begin(), sc.vs.end()) - sc.vs.begin());
  const std::size_t i = sc.argmin;
  sc.bottom = {xs[i], sc.vs[i]};
  if (i > 0 && i + 1 < xs.size()) {
    auto v = [&](double x) { return finite_or_inf(effective_potential(f, p, s, x)); };
    const auto [xm, vm] = boost::math::tools::brent_find_minima(v, xs[i - 1], xs[i + 1], 52);
    if (vm <= sc.bottom.value) sc.bottom = {xm, vm};
  }
  return sc;
}

double root_tol(double x) { return 1e-13 * (1.0 + std::abs(x)); }

}  // namespace

double scheme_nu(SchemeKind s) { return s == SchemeKind::swkb ? 0.0 : 0.5; }

std::string_view to_string(SchemeKind s) {
  switch (s) {
    case SchemeKind::wkb: return "wkb";
    case SchemeKind::langer_wkb: return "langer-wkb";
    case SchemeKind::swkb: return "swkb";
  }
  return "?";
}

std::optional<SchemeKind> scheme_from_key(std::string_view key) {
  for (SchemeKind s : all_schemes) {
    if (to_string(s) == key) return s;
  }
  return std::nullopt;
}

double effective_potential(Family f, const ParamSet& p, SchemeKind s, double x) {
  switch (s) {
    case SchemeKind::wkb:
      return potential_minus(f, p, x);
    case SchemeKind::langer_wkb:
      return potential_minus(f, p, x) + langer_term(f, p, x);
    case SchemeKind::swkb: {
      const double w = superpotential(f, p, x);
      return w * w;
    }
  }
  return 0.0;
}

WellBottom well_bottom(Family f, const ParamSet& p, SchemeKind s) {
  require_valid(f, p);
  return scan_well(f, p, s).bottom;
}

namespace {

TurningPoints turning_points_raw(Family f, const ParamSet& p, SchemeKind s, double E) {
  if (!std::isfinite(E)) throw NoBoundRegionError("energy must be finite");
  const Scan sc = scan_well(f, p, s);
  const auto& xs = *sc.xs;
  const auto& dom = info(f).domain;
  const double vmin = sc.bottom.value;

  TurningPoints tp;
  tp.method = TurningMethod::numeric;
  if (E - vmin <= 1e-10 * std::max(1.0, std::abs(vmin))) {
    if (E < vmin - 1e-10 * std::max(1.0, std::abs(vmin))) {
      throw NoBoundRegionError("energy lies below the minimum of the effective potential");
    }
    tp.x_left = tp.x_right = sc.bottom.x;
    return tp;
  }

  int changes = 0;
  for (std::size_t i = 1; i < xs.size(); ++i) {
    if ((sc.vs[i - 1] - E > 0.0) != (sc.vs[i] - E > 0.0)) ++changes;
  }
  if (changes > 2) {
    throw AmbiguousRegionError("effective potential crosses E = " + std::to_string(E) + " " +
                               std::to_string(changes) + " times");
  }

  auto g = [&](double x) { return finite_or_inf(effective_potential(f, p, s, x)) - E; };
  const double xm = sc.bottom.x;
  const double gm = vmin - E;

  // right side
  std::size_t j = sc.argmin + 1;
  while (j < xs.size() && !(sc.vs[j] - E > 0.0)) ++j;
  if (j == xs.size()) {
    if (dom.singular_right && !dom.infinite_right()) {
      tp.x_right = dom.right;
      tp.open_right = true;
    } else {
      throw NoBoundRegionError("no right turning point: E at or above the right asymptote");
    }
  } else {
    double lo = xs[j - 1], glo = sc.vs[j - 1] - E;
    if (lo <= xm || j - 1 == sc.argmin) {
      lo = xm;
      glo = gm;
    }
    tp.x_right = find_root(g, lo, xs[j], glo, sc.vs[j] - E, root_tol(xs[j]));
  }

  // left side
  std::ptrdiff_t k = static_cast<std::ptrdiff_t>(sc.argmin) - 1;
  while (k >= 0 && !(sc.vs[static_cast<std::size_t>(k)] - E > 0.0)) --k;
  if (k < 0) {
    if (dom.singular_left && !dom.infinite_left()) {
      tp.x_left = dom.left;
      tp.open_left = true;
    } else {
      throw NoBoundRegionError("no left turning point: E at or above the left asymptote");
    }
  } else {
    const auto ku = static_cast<std::size_t>(k);
    double hi = xs[ku + 1], ghi = sc.vs[ku + 1] - E;
    if (hi >= xm || ku + 1 == sc.argmin) {
      hi = xm;
      ghi = gm;
    }
    tp.x_left = find_root(g, xs[ku], hi, sc.vs[ku] - E, ghi, root_tol(xs[ku]));
  }
  return tp;
}

}  // namespace

TurningPoints turning_points_numeric(Family f, const ParamSet& p, SchemeKind s, double E) {
  require_valid(f, p);
  return turning_points_raw(f, p, s, E);
}

namespace {

// E_n - V_Langer written as P(t) / (positive factor) in the family's
// natural variable t; see turning_points_analytic.
struct LangerQuadratic {
  double c2, c1, c0;
  closedform::Kind kind;
  double prefactor;
};

LangerQuadratic langer_quadratic(Family f, const ParamSet& p, int n) {
  const double a = p.a, b = p.b, h = p.hbar, lam = p.lambda;
  const double an = a + n * h;
  const double ah = a - 0.5 * h;
  using closedform::Kind;
  switch (f) {
    case Family::harmonic:
      return {-1.0, 0.0, (2 * n + 1) * h * p.omega / 2.0, Kind::I0, 2.0 / p.omega};
    case Family::morse:
      return {-1.0, 2.0 * a - h, -an * an, Kind::I1b, -1.0};
    case Family::coulomb:
    case Family::rosen_morse_trig:
    case Family::rosen_morse_hyp:
    case Family::eckart: {
      const double c0 =
          -b * b / (an * an) + lam * (a * a - an * an) - lam * h * a + lam * h * h / 4.0;
      Kind kind = Kind::I2a;
      if (f == Family::rosen_morse_trig) kind = Kind::I3;
      if (f == Family::rosen_morse_hyp) kind = Kind::I4;
      if (f == Family::eckart) kind = Kind::I5b;
      return {-ah * ah, -2.0 * b, c0, kind, std::abs(ah)};
    }
    case Family::oscillator_3d:
      return {-ah * ah, p.omega * (2.0 * n * h + a + 0.5 * h), -p.omega * p.omega / 4.0, Kind::I2b,
              0.5 * ah};
    case Family::scarf_trig:
      return {-an * an, -b * (2.0 * a - h), an * an - ah * ah - b * b, Kind::I4, an};
    case Family::scarf_hyp:
      return {-an * an, -b * (h - 2.0 * a), ah * ah - an * an - b * b, Kind::I3, std::abs(an)};
    case Family::poschl_teller:
      return {-an * an, -b * (h - 2.0 * a), an * an - ah * ah - b * b, Kind::I5a, std::abs(an)};
  }
  throw UnsupportedError("unknown family");
}

double x_from_variable(Family f, const ParamSet& p, double t) {
  switch (f) {
    case Family::harmonic: return 2.0 * t / p.omega;
    case Family::morse: return -std::log(-t);
    case Family::coulomb: return -1.0 / t;
    case Family::rosen_morse_trig: return pi / 2.0 + std::atan(t);
    case Family::rosen_morse_hyp: return std::atanh(-t);
    case Family::eckart: return std::atanh(-1.0 / t);
    case Family::oscillator_3d: return 1.0 / std::sqrt(t);
    case Family::scarf_trig: return std::asin(t);
    case Family::scarf_hyp: return std::asinh(t);
    case Family::poschl_teller: return std::acosh(t);
  }
  return 0.0;
}

}  // namespace

TurningPoints turning_points_analytic(Family f, const ParamSet& p, int n) {
  require_valid(f, p);
  if (!bound_state_count(f, p).admits(n)) {
    throw OutOfSpectrumError("level n = " + std::to_string(n) + " is not bound");
  }
  const auto q = langer_quadratic(f, p, n);
  const auto [t1, t2] = quadratic_roots(q.c2, q.c1, q.c0);
  const double x1 = x_from_variable(f, p, t1);
  const double x2 = x_from_variable(f, p, t2);
  TurningPoints tp;
  tp.method = TurningMethod::analytic;
  tp.x_left = std::min(x1, x2);
  tp.x_right = std::max(x1, x2);
  tp.transformed_left = t1;
  tp.transformed_right = t2;
  if (!std::isfinite(tp.x_left) || !std::isfinite(tp.x_right) ||
      !info(f).domain.contains(tp.x_left) || !info(f).domain.contains(tp.x_right)) {
    throw ValidationError("analytic turning points fall outside the domain");
  }
  return tp;
}

AnalyticAction analytic_action(Family f, const ParamSet& p, int n) {
  require_valid(f, p);
  if (!bound_state_count(f, p).admits(n)) {
    throw OutOfSpectrumError("level n = " + std::to_string(n) + " is not bound");
  }
  const auto q = langer_quadratic(f, p, n);
  const auto [t1, t2] = quadratic_roots(q.c2, q.c1, q.c0);
  AnalyticAction out{q.kind, q.prefactor, t1, t2, 0.0};
  out.value = q.prefactor * closedform::evaluate(q.kind, t1, t2);
  return out;
}

QuantizationResult action_at_energy_unchecked(Family f, const ParamSet& p, SchemeKind s,
                                              double E) {
  QuantizationResult r;
  r.energy = E;
  r.turning = turning_points_raw(f, p, s, E);
  const double xl = r.turning.x_left, xr = r.turning.x_right;
  if (xr - xl < 1e-10 * (1.0 + std::abs(xl))) {
    r.degenerate = true;
    return r;
  }
  if (s == SchemeKind::wkb) {
    // V- ~ k(k - hbar)/|f1|^-2 near a singular edge: attractive for k < hbar,
    // and sqrt(E - V) ~ 1/distance is not integrable there
    for (Endpoint side : {Endpoint::left, Endpoint::right}) {
      const bool open = side == Endpoint::left ? r.turning.open_left : r.turning.open_right;
      if (open && singular_coefficient(f, p, side) < p.hbar) {
        throw DomainError("plain WKB action diverges: attractive inverse-square core at the " +
                          std::string(side == Endpoint::left ? "left" : "right") +
                          " edge (k < hbar)");
      }
    }
  }
  auto integrand = [&](double x) {
    const double d = E - effective_potential(f, p, s, x);
    return d > 0.0 ? std::sqrt(d) : 0.0;
  };
  const auto q = integrate_cosine_map(integrand, xl, xr, 1e-10 * p.hbar);
  r.action = q.value;
  r.quad_error_estimate = q.error_estimate;
  r.nodes_used = q.nodes;
  return r;
}

QuantizationResult action_at_energy(Family f, const ParamSet& p, SchemeKind s, double E) {
  require_valid(f, p);
  return action_at_energy_unchecked(f, p, s, E);
}

QuantizationResult action_integral(Family f, const ParamSet& p, int n, SchemeKind s) {
  const double E = exact_energy(f, p, n);
  QuantizationResult r;
  if (s == SchemeKind::swkb && n == 0) {
    r.energy = E;
    r.turning = turning_points_numeric(f, p, s, E);
    r.degenerate = true;
  } else {
    r = action_at_energy(f, p, s, E);
  }
  r.target = (n + scheme_nu(s)) * pi * p.hbar;
  r.residual = r.action - r.target;
  return r;
}

double solve_energy(Family f, const ParamSet& p, int n, SchemeKind s) {
  require_valid(f, p);
  if (n < 0) throw OutOfSpectrumError("level index must be non-negative");
  const double target = (n + scheme_nu(s)) * pi * p.hbar;
  const Scan sc = scan_well(f, p, s);
  const double e_lo0 = sc.bottom.value;
  if (target == 0.0) return e_lo0;

  const auto& dom = info(f).domain;
  // continuum threshold: the far scan value on each infinite side
  double ceiling = inf;
  if (dom.infinite_right()) ceiling = std::min(ceiling, sc.vs.back());
  if (dom.infinite_left()) ceiling = std::min(ceiling, sc.vs.front());

  const double tol = 1e-10 * p.hbar;
  // Returns action - target, or +inf when E has no bounded region.
  auto residual = [&](double E) {
    try {
      return action_at_energy_unchecked(f, p, s, E).action - target;
    } catch (const NoBoundRegionError&) {
      return inf;
    }
  };

  double lo = e_lo0, hi = e_lo0;
  double step = std::max(1.0, std::abs(e_lo0));
  double r_hi = -inf;
  for (int i = 0; i < 80; ++i) {
    hi = e_lo0 + step;
    if (hi >= ceiling) break;
    r_hi = residual(hi);
    if (r_hi >= 0.0) break;
    lo = hi;
    step *= 2.0;
  }
  if (!(r_hi >= 0.0)) {
    if (!std::isfinite(ceiling)) throw NoSolutionError("action never reaches the target");
    for (int k = 1; k <= 60; ++k) {
      hi = ceiling - (ceiling - lo) * std::ldexp(1.0, -k);
      if (hi <= lo) continue;
      r_hi = residual(hi);
      if (r_hi >= 0.0) break;
      lo = hi;
    }
    if (!(r_hi >= 0.0)) {
      throw NoSolutionError("target (n + nu) pi hbar = " + std::to_string(target) +
                            " is not reached below the continuum threshold " +
                            std::to_string(ceiling));
    }
  }
  if (std::abs(r_hi) <= tol) return hi;

  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double r = residual(mid);
    if (std::abs(r) <= tol) return mid;
    if (r < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  throw ConvergenceError("energy bisection did not reach the action tolerance");
}

double asymptotic_slope(Family f, const ParamSet& p, Endpoint side) {
  require_valid(f, p);
  const auto& dom = info(f).domain;
  const bool singular = side == Endpoint::left ? dom.singular_left : dom.singular_right;
  if (!singular) {
    throw UnsupportedError(std::string(info(f).key) + " has no singular " +
                           (side == Endpoint::left ? "left" : "right") + " endpoint");
  }
  const double E = exact_energy(f, p, 0) + 1.0;
  const double edge = side == Endpoint::left ? dom.left : dom.right;
  const double dir = side == Endpoint::left ? 1.0 : -1.0;
  auto ratio = [&](double delta) {
    const double x = edge + dir * delta;
    const double q = std::sqrt(effective_potential(f, p, SchemeKind::langer_wkb, x) - E);
    return q / std::abs(f1_and_derivative(f, p, x).first);
  };
  // two Richardson levels remove the O(delta) and O(delta^2) terms
  const double d = 1e-4;
  const double r0 = ratio(d), r1 = ratio(d / 2), r2 = ratio(d / 4);
  const double a1 = 2.0 * r1 - r0, a2 = 2.0 * r2 - r1;
  return (4.0 * a2 - a1) / 3.0;
}

SpectrumReport spectrum_report(Family f, const ParamSet& p, int n_max,
                               const std::vector<SchemeKind>& schemes) {
  require_valid(f, p);
  SpectrumReport rep{f, p, {}};
  const auto count = bound_state_count(f, p);
  for (int n = 0; n <= n_max; ++n) {
    SpectrumRow row;
    row.n = n;
    if (!count.admits(n)) {
      row.status = "out-of-spectrum";
      rep.rows.push_back(std::move(row));
      continue;
    }
    row.exact = exact_energy(f, p, n);
    for (SchemeKind s : schemes) {
      SchemeCell cell{s};
      try {
        const auto r = action_integral(f, p, n, s);
        cell.action = r.action;
        cell.residual = r.residual;
        cell.solved_energy = solve_energy(f, p, n, s);
      } catch (const Error& e) {
        cell.status = e.what();
      }
      row.cells.push_back(std::move(cell));
    }
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

}  // namespace siwkb
