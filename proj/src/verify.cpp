#include "siwkb/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>

#include "siwkb/errors.hpp"
#include "siwkb/grids.hpp"
#include "siwkb/oracle.hpp"
#include "siwkb/parallel.hpp"
#include "siwkb/quantize.hpp"
#include "siwkb/relation.hpp"

namespace siwkb {

namespace {

constexpr int kLevelCap = 5;
constexpr int kOracleCap = 3;
constexpr int kDenseGrid = 1000;
constexpr int kIdentityGrid = 200;

struct Cell {
  Family family;
  PhysicalParams physical;
  ParamSet params;
};

CheckResult make(const Cell& c, std::string check, double value, double tol, int n = -1,
                 std::string scheme = {}) {
  CheckResult r;
  r.check = std::move(check);
  r.family = std::string(info(c.family).key);
  r.params = c.physical;
  r.n = n;
  r.scheme = std::move(scheme);
  r.value = value;
  r.tolerance = tol;
  r.pass = std::isfinite(value) && value <= tol;
  return r;
}

CheckResult failed(const Cell& c, std::string check, const std::exception& e) {
  CheckResult r = make(c, std::move(check), INFINITY, 0.0);
  r.pass = false;
  r.detail = e.what();
  return r;
}

// Runs body; an exception becomes a failed check rather than aborting the suite.
void guarded(std::vector<CheckResult>& out, const Cell& c, const std::string& check,
             const std::function<void()>& body) {
  try {
    body();
  } catch (const std::exception& e) {
    out.push_back(failed(c, check, e));
  }
}

void structural_checks(const Cell& c, int top, std::vector<CheckResult>& out) {
  guarded(out, c, "structural", [&] {
    const auto grid = interior_grid(c.family, kDenseGrid);
    const double scale = energy_scale(c.family, c.params, top, grid);
    const auto r = structural_residuals(c.family, c.params, grid);
    const double tol = 1e-12 * scale;
    out.push_back(make(c, "shape-invariance", r.shape_invariance, tol));
    out.push_back(make(c, "pde", r.pde, tol));
    out.push_back(make(c, "riccati-f1", r.riccati_f1, tol));
    if (potential_class(c.family) != PotentialClass::II)
      out.push_back(make(c, "riccati-f2", r.riccati_f2, tol));
    out.push_back(make(c, "ground-state-zero", std::abs(exact_energy(c.family, c.params, 0)),
                       1e-14));
    double worst = 0.0;  // spectrum must increase strictly
    for (int n = 1; n <= top; ++n) {
      const double gap =
          exact_energy(c.family, c.params, n) - exact_energy(c.family, c.params, n - 1);
      worst = std::max(worst, gap > 0.0 ? 0.0 : 1.0);
    }
    out.push_back(make(c, "monotone-spectrum", worst, 0.0));
  });
}

void action_checks(const Cell& c, int top, double tol, std::vector<CheckResult>& out) {
  const double hbar = c.params.hbar;
  for (SchemeKind s : all_schemes) {
    const std::string scheme(to_string(s));
    guarded(out, c, "action", [&] {
      double worst = 0.0;
      for (int n = 0; n <= top; ++n) {
        const auto q = action_integral(c.family, c.params, n, s);
        worst = std::max(worst, std::abs(q.residual));
      }
      if (s == SchemeKind::wkb && potential_class(c.family) != PotentialClass::I) {
        CheckResult r = make(c, "wkb-needs-correction", worst, 1e-3 * hbar, -1, scheme);
        r.comparison = ">";
        r.pass = worst > r.tolerance;
        r.units_hbar = true;
        out.push_back(r);
      } else {
        CheckResult r = make(c, "action-exact", worst, tol * hbar, -1, scheme);
        r.units_hbar = true;
        out.push_back(r);
      }
    });
  }
  guarded(out, c, "solve-energy", [&] {
    double worst = 0.0;
    for (int n = 0; n <= top; ++n) {
      const double e = exact_energy(c.family, c.params, n);
      const double solved = solve_energy(c.family, c.params, n, SchemeKind::langer_wkb);
      worst = std::max(worst, std::abs(solved - e) / (1.0 + std::abs(e)));
    }
    out.push_back(make(c, "solve-energy", worst, 1e-6, -1, "langer-wkb"));
  });
}

void turning_point_checks(const Cell& c, int top, std::vector<CheckResult>& out) {
  guarded(out, c, "turning-points", [&] {
    double worst = 0.0;
    for (int n = 0; n <= top; ++n) {
      const double e = exact_energy(c.family, c.params, n);
      const auto a = turning_points_analytic(c.family, c.params, n);
      const auto num = turning_points_numeric(c.family, c.params, SchemeKind::langer_wkb, e);
      if (a.open_left != num.open_left || a.open_right != num.open_right) {
        worst = INFINITY;
        break;
      }
      if (!a.open_left)
        worst = std::max(worst, std::abs(a.x_left - num.x_left) / (1.0 + std::abs(a.x_left)));
      if (!a.open_right)
        worst = std::max(worst, std::abs(a.x_right - num.x_right) / (1.0 + std::abs(a.x_right)));
    }
    out.push_back(make(c, "turning-points", worst, 1e-9, -1, "langer-wkb"));
  });
}

void relation_checks(const Cell& c, int top, std::vector<CheckResult>& out) {
  guarded(out, c, "identity", [&] {
    const auto grid = interior_grid(c.family, kIdentityGrid);
    const double scale = energy_scale(c.family, c.params, top, grid);
    double worst = 0.0;
    for (int n = 0; n <= top; ++n)
      for (double x : grid)
        worst = std::max(worst, std::abs(integrand_identity_residual(c.family, c.params, n, x)));
    out.push_back(make(c, "identity", worst, 1e-12 * scale));
  });
  guarded(out, c, "half-shift", [&] {
    double worst = 0.0;
    for (int n = 0; n <= top; ++n) {
      const auto h = half_shift_action_check(c.family, c.params, n);
      worst = std::max({worst, std::abs(h.langer - h.shifted), std::abs(h.langer - h.target),
                        std::abs(h.shifted - h.target)});
    }
    CheckResult r = make(c, "half-shift", worst, 2e-8 * c.params.hbar);
    r.units_hbar = true;
    out.push_back(r);
  });
}

void oracle_checks(const Cell& c, std::vector<CheckResult>& out) {
  const int top = max_level(c.family, c.params, kOracleCap);
  guarded(out, c, "oracle-energy", [&] {
    double worst = 0.0;
    double ground = 0.0;
    for (int n = 0; n <= top; ++n) {
      const double e = exact_energy(c.family, c.params, n);
      const double num = oracle::eigenvalue(c.family, c.params, n);
      worst = std::max(worst, std::abs(num - e) / (1.0 + std::abs(e)));
      if (n == 0) ground = std::abs(num);
    }
    out.push_back(make(c, "oracle-energy", worst, 1e-6));
    out.push_back(make(c, "oracle-ground-state", ground, 1e-6, 0));
  });
}

void endpoint_checks(const Cell& c, std::vector<CheckResult>& out) {
  const auto& dom = info(c.family).domain;
  for (Endpoint side : {Endpoint::left, Endpoint::right}) {
    const bool singular = side == Endpoint::left ? dom.singular_left : dom.singular_right;
    if (!singular) continue;
    const std::string tag = side == Endpoint::left ? "left" : "right";
    guarded(out, c, "asymptotic-slope-" + tag, [&] {
      const double k = singular_coefficient(c.family, c.params, side);
      const double expected = std::abs(k - 0.5 * c.params.hbar);
      const double got = asymptotic_slope(c.family, c.params, side);
      out.push_back(make(c, "asymptotic-slope-" + tag, std::abs(got - expected) / expected, 1e-6));
    });
    guarded(out, c, "log-slope-" + tag, [&] {
      const auto s = oracle::singular_log_slope(c.family, c.params, 0, side);
      out.push_back(make(c, "log-slope-" + tag, std::abs(s.measured - s.expected), 1e-3, 0));
    });
  }
}

std::vector<CheckResult> family_cell(const Cell& c, const VerifyOptions& opt) {
  std::vector<CheckResult> out;
  guarded(out, c, "validate", [&] { require_valid(c.family, c.params); });
  if (!out.empty()) return out;
  const int top = max_level(c.family, c.params, kLevelCap);
  structural_checks(c, top, out);
  action_checks(c, top, opt.tol, out);
  turning_point_checks(c, top, out);
  relation_checks(c, top, out);
  if (opt.oracle) {
    oracle_checks(c, out);
    endpoint_checks(c, out);
  }
  return out;
}

std::vector<CheckResult> closedform_cell(closedform::Kind k, const VerifyOptions& opt) {
  CheckResult r;
  r.check = "closedform-" + std::string(closedform::name(k));
  r.tolerance = 1e-10;
  try {
    const auto samples = closedform_samples(k, opt.seed, opt.closedform_samples);
    for (auto [y1, y2] : samples) {
      const double v = closedform::evaluate(k, y1, y2);
      const double ref = closedform::numeric_reference(k, y1, y2);
      r.value = std::max(r.value, std::abs(v - ref) / (1.0 + std::abs(v)));
    }
    r.pass = r.value <= r.tolerance;
    r.detail = std::to_string(samples.size()) + " samples";
  } catch (const std::exception& e) {
    r.value = INFINITY;
    r.detail = e.what();
  }
  return {r};
}

std::vector<CheckResult> spot_values() {
  using closedform::Kind;
  std::vector<CheckResult> out;
  const auto spot = [&](std::string check, double value, double expected) {
    CheckResult r;
    r.check = std::move(check);
    r.value = std::abs(value - expected);
    r.tolerance = 1e-14;
    r.pass = r.value <= r.tolerance;
    out.push_back(r);
  };
  spot("closedform-spot-I0", closedform::evaluate(Kind::I0, -1.0, 1.0), std::numbers::pi / 2);
  spot("closedform-spot-I1a", closedform::evaluate(Kind::I1a, 1.0, 4.0), std::numbers::pi / 2);
  return out;
}

}  // namespace

std::vector<std::pair<double, double>> closedform_samples(closedform::Kind k, std::uint64_t seed,
                                                          int count) {
  using closedform::Kind;
  std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(k) + 1)));
  auto uniform = [&](double lo, double hi) {
    return lo + (hi - lo) * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
  };
  double lo = -10.0, hi = 10.0;
  switch (k) {
    case Kind::I0:
    case Kind::I3: break;
    case Kind::I1a:
    case Kind::I2b: lo = 0.05; break;
    case Kind::I1b:
    case Kind::I2a: hi = -0.05; break;
    case Kind::I4: lo = -0.95, hi = 0.95; break;
    case Kind::I5a: lo = 1.05; break;
    case Kind::I5b: hi = -1.05; break;
  }
  std::vector<std::pair<double, double>> out;
  out.reserve(static_cast<std::size_t>(count));
  while (static_cast<int>(out.size()) < count) {
    double y1 = uniform(lo, hi), y2 = uniform(lo, hi);
    if (y1 > y2) std::swap(y1, y2);
    if (y2 - y1 < 1e-3) continue;
    out.emplace_back(y1, y2);
  }
  return out;
}

std::vector<CheckResult> verify_suite(const VerifyOptions& opt) {
  std::vector<Cell> cells;
  for (Family f : all_families)
    for (const auto& phys : jittered_grid(f, opt.seed)) cells.push_back({f, phys, make_params(f, phys)});

  const std::size_t kinds = closedform::all_kinds.size();
  auto parts = parallel_map<std::vector<CheckResult>>(cells.size() + kinds, [&](std::size_t i) {
    if (i < cells.size()) return family_cell(cells[i], opt);
    return closedform_cell(closedform::all_kinds[i - cells.size()], opt);
  });

  std::vector<CheckResult> out;
  for (auto& part : parts) out.insert(out.end(), part.begin(), part.end());
  for (auto& r : spot_values()) out.push_back(std::move(r));
  return out;
}

}  // namespace siwkb
