// Prints one PASS/FAIL line per acceptance criterion; exits nonzero if any fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "siwkb/closedform.hpp"
#include "siwkb/grids.hpp"
#include "siwkb/oracle.hpp"
#include "siwkb/parallel.hpp"
#include "siwkb/quantize.hpp"
#include "siwkb/relation.hpp"
#include "siwkb/verify.hpp"

using namespace siwkb;
using std::numbers::pi;

namespace {

constexpr double hbar = 1.0;

struct Cell {
  Family family;
  ParamSet params;
  int top;
};

std::vector<Cell> grid_cells() {
  std::vector<Cell> cells;
  for (Family f : all_families)
    for (const auto& phys : default_grid(f)) {
      const auto p = make_params(f, phys, hbar);
      cells.push_back({f, p, max_level(f, p, 5)});
    }
  return cells;
}

struct Verdict {
  bool pass = true;
  std::string summary;
  std::string failure;  // first offending case
};

void note_failure(Verdict& v, const std::string& what) {
  if (v.pass) v.failure = what;
  v.pass = false;
}

std::string where(const Cell& c, int n) {
  std::string s(info(c.family).key);
  for (const auto& [k, val] : physical_params(c.family, c.params)) s += " " + k + "=" + std::to_string(val);
  if (n >= 0) s += " n=" + std::to_string(n);
  return s;
}

std::string fmt(const char* f, double a, double b = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, f, a, b);
  return buf;
}

// worst |action - target| over the grid for one scheme
Verdict exact_actions(const std::vector<Cell>& cells, SchemeKind s) {
  Verdict v;
  double worst = 0.0;
  int count = 0;
  for (const auto& c : cells)
    for (int n = 0; n <= c.top; ++n) {
      const auto q = action_integral(c.family, c.params, n, s);
      const double target = (n + scheme_nu(s)) * pi * hbar;
      double err = std::abs(q.action - target);
      if (s == SchemeKind::swkb && n == 0 && !(q.degenerate && q.action == 0.0)) err = INFINITY;
      worst = std::max(worst, err);
      ++count;
      if (!(err <= 1e-8 * hbar)) note_failure(v, where(c, n) + fmt(" error %.3g", err));
    }
  v.summary = std::to_string(count) + " levels, max error " + fmt("%.3g hbar", worst / hbar);
  return v;
}

Verdict criterion1(const std::vector<Cell>& cells) { return exact_actions(cells, SchemeKind::langer_wkb); }
Verdict criterion2(const std::vector<Cell>& cells) { return exact_actions(cells, SchemeKind::swkb); }

Verdict criterion3(const std::vector<Cell>& cells) {
  Verdict v;
  double worst_exact = 0.0;
  int needing = 0;
  for (Family f : all_families) {
    const bool class_one = potential_class(f) == PotentialClass::I;
    double family_max = 0.0;
    for (const auto& c : cells) {
      if (c.family != f) continue;
      for (int n = 0; n <= c.top; ++n) {
        double residual = INFINITY;
        try {
          const auto q = action_integral(f, c.params, n, SchemeKind::wkb);
          residual = std::abs(q.action - (n + 0.5) * pi * hbar);
        } catch (const std::exception&) {
          // divergent plain action counts as a failure of the uncorrected rule
        }
        family_max = std::max(family_max, residual);
        if (class_one) {
          worst_exact = std::max(worst_exact, residual);
          if (!(residual <= 1e-8 * hbar)) note_failure(v, where(c, n) + fmt(" plain residual %.3g", residual));
        }
      }
    }
    if (!class_one) {
      if (family_max > 1e-3 * hbar)
        ++needing;
      else
        note_failure(v, std::string(info(f).key) + fmt(" largest plain residual only %.3g", family_max));
    }
  }
  v.summary = fmt("Class I max residual %.3g hbar, ", worst_exact) + std::to_string(needing) +
              "/8 other families need the correction";
  return v;
}

Verdict criterion4() {
  Verdict v;
  double worst = 0.0;
  for (auto k : closedform::all_kinds)
    for (auto [y1, y2] : closedform_samples(k, 0, 1000)) {
      const double val = closedform::evaluate(k, y1, y2);
      const double err = std::abs(val - closedform::numeric_reference(k, y1, y2)) / (1 + std::abs(val));
      worst = std::max(worst, err);
      if (!(err <= 1e-10))
        note_failure(v, std::string(closedform::name(k)) + fmt(" (%.17g, ", y1) + fmt("%.17g)", y2));
    }
  const double s0 = std::abs(closedform::evaluate(closedform::Kind::I0, -1, 1) - pi / 2);
  const double s1 = std::abs(closedform::evaluate(closedform::Kind::I1a, 1, 4) - pi / 2);
  if (!(s0 <= 1e-14)) note_failure(v, fmt("I0(-1,1) off by %.3g", s0));
  if (!(s1 <= 1e-14)) note_failure(v, fmt("I1a(1,4) off by %.3g", s1));
  v.summary = fmt("9000 samples, max relative error %.3g; spot errors %.3g", worst, std::max(s0, s1));
  return v;
}

Verdict criterion5(const std::vector<Cell>& cells) {
  struct Job {
    std::size_t cell;
    int n;
  };
  std::vector<Job> jobs;
  for (std::size_t i = 0; i < cells.size(); ++i)
    for (int n = 0; n <= std::min(cells[i].top, 3); ++n) jobs.push_back({i, n});
  struct Out {
    double err = INFINITY;
    std::string error;
  };
  const auto results = parallel_map<Out>(jobs.size(), [&](std::size_t j) {
    const auto& c = cells[jobs[j].cell];
    const int n = jobs[j].n;
    Out o;
    try {
      const double e = oracle::eigenvalue(c.family, c.params, n);
      const double exact = exact_energy(c.family, c.params, n);
      o.err = n == 0 ? std::max(std::abs(e - exact) / (1 + std::abs(exact)), std::abs(e))
                     : std::abs(e - exact) / (1 + std::abs(exact));
    } catch (const std::exception& ex) {
      o.error = ex.what();
    }
    return o;
  });
  Verdict v;
  double worst = 0.0;
  for (std::size_t j = 0; j < jobs.size(); ++j) {
    const auto& r = results[j];
    worst = std::max(worst, r.err);
    if (!(r.err <= 1e-6))
      note_failure(v, where(cells[jobs[j].cell], jobs[j].n) +
                          (r.error.empty() ? fmt(" error %.3g", r.err) : " " + r.error));
  }
  v.summary = std::to_string(jobs.size()) + " levels, max scaled error " + fmt("%.3g", worst);
  return v;
}

Verdict criterion6(const std::vector<Cell>& cells) {
  Verdict v;
  double worst_identity = 0.0, worst_shift = 0.0;
  for (const auto& c : cells) {
    const auto xs = interior_grid(c.family, 200);
    const double scale = energy_scale(c.family, c.params, c.top, xs);
    for (int n = 0; n <= c.top; ++n) {
      double m = 0.0;
      for (double x : xs) m = std::max(m, std::abs(integrand_identity_residual(c.family, c.params, n, x)));
      worst_identity = std::max(worst_identity, m / scale);
      if (!(m <= 1e-12 * scale)) note_failure(v, where(c, n) + fmt(" identity residual %.3g", m));
      const auto h = half_shift_action_check(c.family, c.params, n);
      const double d = std::max({std::abs(h.langer - h.shifted), std::abs(h.langer - h.target),
                                 std::abs(h.shifted - h.target)});
      worst_shift = std::max(worst_shift, d);
      if (!(d <= 2e-8 * hbar)) note_failure(v, where(c, n) + fmt(" half-shift spread %.3g", d));
    }
  }
  v.summary = fmt("max identity residual %.3g scale, max half-shift spread %.3g hbar", worst_identity, worst_shift);
  return v;
}

Verdict criterion7(const std::vector<Cell>& cells) {
  Verdict v;
  double worst_asym = 0.0, worst_log = 0.0;
  for (const auto& c : cells) {
    if (c.family == Family::coulomb || c.family == Family::oscillator_3d) {
      const double expect = c.params.a - c.params.hbar / 2;
      const double got = asymptotic_slope(c.family, c.params, Endpoint::left);
      const double rel = std::abs(got - expect) / std::abs(expect);
      worst_asym = std::max(worst_asym, rel);
      if (!(rel <= 1e-6)) note_failure(v, where(c, -1) + fmt(" asymptotic slope %.17g", got));
    }
    const auto& dom = info(c.family).domain;
    for (Endpoint side : {Endpoint::left, Endpoint::right}) {
      if (!(side == Endpoint::left ? dom.singular_left : dom.singular_right)) continue;
      try {
        const auto s = oracle::singular_log_slope(c.family, c.params, 0, side);
        const double d = std::abs(s.measured - s.expected);
        worst_log = std::max(worst_log, d);
        if (!(d <= 1e-3)) note_failure(v, where(c, 0) + fmt(" log slope %.6g vs %.6g", s.measured, s.expected));
      } catch (const std::exception& ex) {
        note_failure(v, where(c, 0) + " " + ex.what());
      }
    }
  }
  v.summary = fmt("max asymptotic relative error %.3g, max log-slope error %.3g", worst_asym, worst_log);
  return v;
}

Verdict criterion8(const std::vector<Cell>& cells) {
  Verdict v;
  double worst = 0.0;
  for (const auto& c : cells) {
    const auto xs = interior_grid(c.family, 1000);
    const double scale = energy_scale(c.family, c.params, c.top, xs);
    const auto r = structural_residuals(c.family, c.params, xs);
    double m = std::max({r.shape_invariance, r.pde, r.riccati_f1});
    if (potential_class(c.family) != PotentialClass::II) m = std::max(m, r.riccati_f2);
    worst = std::max(worst, m / scale);
    if (!(m <= 1e-12 * scale)) note_failure(v, where(c, -1) + fmt(" residual %.3g", m));
  }
  v.summary = fmt("max residual %.3g scale on 1000-point grids", worst);
  return v;
}

Verdict criterion9(const std::vector<Cell>& cells) {
  Verdict v;
  double worst = 0.0;
  int count = 0;
  for (const auto& c : cells)
    for (int n = 0; n <= c.top; ++n) {
      const auto a = turning_points_analytic(c.family, c.params, n);
      const auto num =
          turning_points_numeric(c.family, c.params, SchemeKind::langer_wkb, exact_energy(c.family, c.params, n));
      for (auto [x, y, open] : {std::tuple{a.x_left, num.x_left, a.open_left},
                                std::tuple{a.x_right, num.x_right, a.open_right}}) {
        if (open) continue;
        const double d = std::abs(x - y) / (1 + std::abs(x));
        worst = std::max(worst, d);
        ++count;
        if (!(d <= 1e-9)) note_failure(v, where(c, n) + fmt(" analytic %.17g numeric %.17g", x, y));
      }
    }
  v.summary = std::to_string(count) + " roots, max scaled difference " + fmt("%.3g", worst);
  return v;
}

}  // namespace

int main() {
  const auto cells = grid_cells();
  const std::vector<std::pair<int, std::function<Verdict()>>> criteria{
      {1, [&] { return criterion1(cells); }}, {2, [&] { return criterion2(cells); }},
      {3, [&] { return criterion3(cells); }}, {4, [] { return criterion4(); }},
      {5, [&] { return criterion5(cells); }}, {6, [&] { return criterion6(cells); }},
      {7, [&] { return criterion7(cells); }}, {8, [&] { return criterion8(cells); }},
      {9, [&] { return criterion9(cells); }},
  };
  int failed = 0;
  for (const auto& [id, run] : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = run();
    } catch (const std::exception& ex) {
      v.pass = false;
      v.failure = std::string("exception: ") + ex.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("criterion %d: %s  %s (%.2f s)\n", id, v.pass ? "PASS" : "FAIL", v.summary.c_str(), secs);
    if (!v.pass) {
      std::printf("  first failure: %s\n", v.failure.c_str());
      ++failed;
    }
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
