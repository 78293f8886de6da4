#include <doctest.h>

#include <cmath>
#include <numbers>

#include "siwkb/errors.hpp"
#include "siwkb/grids.hpp"
#include "siwkb/numerics.hpp"
#include "siwkb/quantize.hpp"
#include "support.hpp"

using namespace siwkb;
using std::numbers::pi;

namespace {

ParamSet params(Family f, const PhysicalParams& phys, double hbar = 1.0) {
  return make_params(f, phys, hbar);
}

// Search window for the reference scan: the domain, pulled in from singular
// edges and cut off far out on infinite sides.
std::pair<double, double> scan_window(Family f) {
  const auto& d = info(f).domain;
  const double lo = d.infinite_left() ? -60.0 : d.left + 1e-9;
  const double hi = d.infinite_right() ? 200.0 : d.right - 1e-9;
  return {lo, hi};
}

}  // namespace

TEST_CASE("scheme metadata") {
  CHECK(scheme_nu(SchemeKind::wkb) == 0.5);
  CHECK(scheme_nu(SchemeKind::langer_wkb) == 0.5);
  CHECK(scheme_nu(SchemeKind::swkb) == 0.0);
  for (SchemeKind s : all_schemes) CHECK(scheme_from_key(to_string(s)) == s);
  CHECK_FALSE(scheme_from_key("wkb2").has_value());
}

TEST_CASE("turning points, closed cases") {
  const auto h = params(Family::harmonic, {{"omega", 1}});
  const auto sw = turning_points_numeric(Family::harmonic, h, SchemeKind::swkb, 1.0);
  CHECK(sw.x_left == doctest::Approx(-2.0).epsilon(1e-12));
  CHECK(sw.x_right == doctest::Approx(2.0).epsilon(1e-12));
  const auto wk = turning_points_numeric(Family::harmonic, h, SchemeKind::wkb, 1.0);
  CHECK(wk.x_left == doctest::Approx(-std::sqrt(6.0)).epsilon(1e-12));
  CHECK(wk.x_right == doctest::Approx(std::sqrt(6.0)).epsilon(1e-12));

  const auto a = turning_points_analytic(Family::harmonic, h, 0);
  CHECK(a.transformed_left == doctest::Approx(-std::sqrt(0.5)).epsilon(1e-14));
  CHECK(a.transformed_right == doctest::Approx(std::sqrt(0.5)).epsilon(1e-14));
  CHECK(a.method == TurningMethod::analytic);

  const auto osc = turning_points_analytic(Family::oscillator_3d, params(Family::oscillator_3d, {{"l", 1}, {"omega", 1}}), 1);
  CHECK(osc.transformed_left > 0.0);
  CHECK(osc.transformed_left < osc.transformed_right);
}

TEST_CASE("Coulomb Langer turning points match the closed form") {
  const auto p = params(Family::coulomb, {{"l", 1}, {"e2", 2}});
  for (int n : {0, 1}) {
    const double e = exact_energy(Family::coulomb, p, n);
    const auto num = turning_points_numeric(Family::coulomb, p, SchemeKind::langer_wkb, e);
    const auto ana = turning_points_analytic(Family::coulomb, p, n);
    CHECK(std::abs(num.x_left - ana.x_left) <= 1e-10 * (1 + ana.x_left));
    CHECK(std::abs(num.x_right - ana.x_right) <= 1e-10 * (1 + ana.x_right));
    // f1 = -1/r images
    CHECK(ana.transformed_left == doctest::Approx(-1.0 / ana.x_left).epsilon(1e-12));
  }
}

TEST_CASE("no bound region") {
  const auto h = params(Family::harmonic, {{"omega", 1}});
  CHECK_THROWS_AS(turning_points_numeric(Family::harmonic, h, SchemeKind::wkb, -5.0), NoBoundRegionError);
}

TEST_CASE("analytic and numeric turning points agree on the grid") {
  for (Family f : all_families) {
    for (const auto& phys : default_grid(f)) {
      const auto p = params(f, phys);
      for (int n = 0; n <= max_level(f, p, 5); ++n) {
        CAPTURE(info(f).key);
        CAPTURE(n);
        const double e = exact_energy(f, p, n);
        const auto a = turning_points_analytic(f, p, n);
        const auto num = turning_points_numeric(f, p, SchemeKind::langer_wkb, e);
        CHECK(std::abs(a.x_left - num.x_left) <= 1e-9 * (1 + std::abs(a.x_left)));
        CHECK(std::abs(a.x_right - num.x_right) <= 1e-9 * (1 + std::abs(a.x_right)));
        // against a plain scan-and-refine
        const auto [lo, hi] = scan_window(f);
        const auto [l, r] = testing::scan_turning_points(
            [&](double x) { return effective_potential(f, p, SchemeKind::langer_wkb, x); }, e, lo, hi);
        CHECK(std::abs(a.x_left - l) <= 1e-9 * (1 + std::abs(l)));
        CHECK(std::abs(a.x_right - r) <= 1e-9 * (1 + std::abs(r)));
      }
    }
  }
}

TEST_CASE("action integral examples") {
  const auto h = params(Family::harmonic, {{"omega", 1.7}});
  const auto q = action_integral(Family::harmonic, h, 2, SchemeKind::wkb);
  CHECK(std::abs(q.action - 2.5 * pi) <= 1e-8);

  const auto c = params(Family::coulomb, {{"l", 1}, {"e2", 2}});
  const auto lc = action_integral(Family::coulomb, c, 0, SchemeKind::langer_wkb);
  CHECK(std::abs(lc.action - 0.5 * pi) <= 1e-8);
  CHECK(lc.target == doctest::Approx(0.5 * pi).epsilon(1e-15));
  const auto wc = action_integral(Family::coulomb, c, 0, SchemeKind::wkb);
  CHECK(std::abs(wc.residual) > 0.01);

  const auto e = params(Family::eckart, {{"A", 1}, {"B", 9}});
  CHECK(std::abs(action_integral(Family::eckart, e, 1, SchemeKind::swkb).action - pi) <= 1e-8);
}

TEST_CASE("SWKB ground state is a degenerate point") {
  for (Family f : all_families) {
    const auto p = params(f, default_grid(f).front());
    const auto q = action_integral(f, p, 0, SchemeKind::swkb);
    CHECK(q.degenerate);
    CHECK(q.action == 0.0);
    CHECK(q.residual == 0.0);
  }
}

TEST_CASE("actions agree with an independent quadrature") {
  for (Family f : all_families) {
    for (const auto& phys : default_grid(f)) {
      const auto p = params(f, phys);
      for (int n = 1; n <= max_level(f, p, 3); ++n) {
        for (SchemeKind s : all_schemes) {
          CAPTURE(info(f).key);
          CAPTURE(n);
          CAPTURE(to_string(s));
          const double e = exact_energy(f, p, n);
          QuantizationResult q;
          try {
            q = action_integral(f, p, n, s);
          } catch (const DomainError&) {
            continue;  // plain WKB with an attractive r^-2 core
          }
          auto V = [&](double x) { return effective_potential(f, p, s, x); };
          double lo = q.turning.x_left, hi = q.turning.x_right;
          const auto& dom = info(f).domain;
          if (q.turning.open_left) lo = dom.left;
          if (q.turning.open_right) hi = dom.right;
          const double ref = testing::sqrt_action(V, e, lo, hi);
          CHECK(std::abs(q.action - ref) <= 1e-9 * (1 + ref));
        }
      }
    }
  }
}

TEST_CASE("action grows with energy") {
  for (Family f : all_families) {
    const auto p = params(f, default_grid(f)[2]);
    const int top = max_level(f, p, 5);
    const double e_top = exact_energy(f, p, top);
    for (SchemeKind s : {SchemeKind::langer_wkb, SchemeKind::swkb}) {
      double prev = -1.0;
      for (int k = 1; k <= 40; ++k) {
        const double e = e_top * k / 40.0;
        const double a = action_at_energy(f, p, s, e).action;
        CHECK(a > prev);
        prev = a;
      }
    }
  }
}

TEST_CASE("quadrature has converged at the accepted node count") {
  for (Family f : all_families) {
    const auto p = params(f, default_grid(f)[1]);
    for (int n = 1; n <= max_level(f, p, 3); ++n) {
      const double e = exact_energy(f, p, n);
      const auto q = action_integral(f, p, n, SchemeKind::langer_wkb);
      auto g = [&](double x) {
        const double d = e - effective_potential(f, p, SchemeKind::langer_wkb, x);
        return d > 0 ? std::sqrt(d) : 0.0;
      };
      // one more doubling past the accepted count
      const auto twice = integrate_cosine_map(g, q.turning.x_left, q.turning.x_right, INFINITY,
                                              q.nodes_used, 2 * q.nodes_used);
      CHECK(twice.nodes == 2 * q.nodes_used);
      CHECK(std::abs(twice.value - q.action) <= 1e-10);
    }
  }
}

TEST_CASE("solve_energy") {
  const auto h = params(Family::harmonic, {{"omega", 1}});
  CHECK(std::abs(solve_energy(Family::harmonic, h, 4, SchemeKind::langer_wkb) - 4.0) <= 1e-9);
  const auto pt = params(Family::poschl_teller, {{"A", 3}, {"B", 5}});
  CHECK(std::abs(solve_energy(Family::poschl_teller, pt, 1, SchemeKind::langer_wkb) -
                 exact_energy(Family::poschl_teller, pt, 1)) <= 1e-8);
  const auto m = params(Family::morse, {{"A", 2}});
  CHECK(std::abs(solve_energy(Family::morse, m, 0, SchemeKind::swkb)) <= 1e-10);
  const auto m25 = params(Family::morse, {{"A", 2.5}});
  CHECK_THROWS_AS(solve_energy(Family::morse, m25, 4, SchemeKind::langer_wkb), Error);
}

TEST_CASE("asymptotic slope at singular endpoints") {
  CHECK(asymptotic_slope(Family::coulomb, params(Family::coulomb, {{"l", 2}, {"e2", 1}}), Endpoint::left) ==
        doctest::Approx(1.5).epsilon(1e-6));
  CHECK(asymptotic_slope(Family::oscillator_3d, params(Family::oscillator_3d, {{"l", 1}, {"omega", 1}}),
                         Endpoint::left) == doctest::Approx(0.5).epsilon(1e-6));

  // Poschl-Teller: Q = sqrt(V_Langer - E) against |f1| near r = 0, measured directly
  const auto pt = params(Family::poschl_teller, {{"A", 3}, {"B", 5}});
  const double e = 1.0;
  auto q_over_f1 = [&](double r) {
    const double q = std::sqrt(effective_potential(Family::poschl_teller, pt, SchemeKind::langer_wkb, r) - e);
    return q / std::abs(f1_and_derivative(Family::poschl_teller, pt, r).first);
  };
  const double measured = 2 * q_over_f1(1e-6) - q_over_f1(2e-6);
  CHECK(asymptotic_slope(Family::poschl_teller, pt, Endpoint::left) == doctest::Approx(measured).epsilon(1e-6));
  CHECK(measured == doctest::Approx(1.5).epsilon(1e-6));

  CHECK_THROWS_AS(asymptotic_slope(Family::harmonic, params(Family::harmonic, {{"omega", 1}}), Endpoint::left),
                  UnsupportedError);
}

TEST_CASE("spectrum report") {
  const auto h = params(Family::harmonic, {{"omega", 1}});
  const auto rep = spectrum_report(Family::harmonic, h, 3, {all_schemes.begin(), all_schemes.end()});
  REQUIRE(rep.rows.size() == 4);
  for (const auto& row : rep.rows)
    for (const auto& cell : row.cells) CHECK(std::abs(cell.residual) <= 1e-8);

  const auto m = params(Family::morse, {{"A", 2.5}});
  const auto mr = spectrum_report(Family::morse, m, 5, {SchemeKind::langer_wkb});
  REQUIRE(mr.rows.size() == 6);
  CHECK(mr.rows[2].status == "ok");
  CHECK(mr.rows[3].status == "out-of-spectrum");
  CHECK(mr.rows[4].status == "out-of-spectrum");

  const auto c = params(Family::coulomb, {{"l", 1}, {"e2", 2}});
  const auto cr = spectrum_report(Family::coulomb, c, 2, {SchemeKind::wkb});
  for (const auto& row : cr.rows) CHECK(std::abs(row.cells.front().residual) > 1e-3);
}

TEST_CASE("plain WKB diverges on an attractive inverse-square core") {
  const auto p = params(Family::eckart, {{"A", 0.9}, {"B", 9}});
  REQUIRE(validate(Family::eckart, p).valid);
  CHECK_THROWS_AS(action_integral(Family::eckart, p, 0, SchemeKind::wkb), DomainError);
  CHECK(std::abs(action_integral(Family::eckart, p, 0, SchemeKind::langer_wkb).residual) <= 1e-8);
}

TEST_CASE("hbar scaling") {
  // the Langer result must hold for any hbar, not just hbar = 1
  for (double hbar : {0.3, 0.5}) {
    const auto p = params(Family::coulomb, {{"l", 1.2}, {"e2", 2}}, hbar);
    for (int n = 0; n < 4; ++n) {
      const auto q = action_integral(Family::coulomb, p, n, SchemeKind::langer_wkb);
      CHECK(std::abs(q.residual) <= 1e-8 * hbar);
    }
  }
}
