#pragma once

#include <optional>
#include <string>
#include <vector>

#include "siwkb/closedform.hpp"
#include "siwkb/potentials.hpp"

namespace siwkb {

enum class SchemeKind { wkb, langer_wkb, swkb };

inline constexpr std::array<SchemeKind, 3> all_schemes{SchemeKind::wkb, SchemeKind::langer_wkb,
                                                       SchemeKind::swkb};

/// Phase constant: 1/2 for both WKB variants, 0 for SWKB.
double scheme_nu(SchemeKind s);
std::string_view to_string(SchemeKind s);
std::optional<SchemeKind> scheme_from_key(std::string_view key);

/// WKB: V-, LangerWKB: V- + hbar^2 f1'/4, SWKB: W^2.
double effective_potential(Family f, const ParamSet& p, SchemeKind s, double x);

enum class TurningMethod { analytic, numeric };

struct TurningPoints {
  double x_left = 0.0;
  double x_right = 0.0;
  // analytic only: the roots in the family's own variable (f2, f1, f1^2, ...),
  // ascending in that variable; the transform may reverse the x order
  double transformed_left = 0.0;
  double transformed_right = 0.0;
  TurningMethod method = TurningMethod::numeric;
  // V_eff stays below E all the way to a singular endpoint; the action then
  // runs to the domain edge, which is integrable for V ~ -c/r.
  bool open_left = false;
  bool open_right = false;
};

/// Minimum of the effective potential over the domain.
struct WellBottom {
  double x = 0.0;
  double value = 0.0;
};

WellBottom well_bottom(Family f, const ParamSet& p, SchemeKind s);

TurningPoints turning_points_numeric(Family f, const ParamSet& p, SchemeKind s, double E);

/// Closed-form LangerWKB turning points at E = exact_energy(n).
TurningPoints turning_points_analytic(Family f, const ParamSet& p, int n);

struct QuantizationResult {
  double energy = 0.0;
  double action = 0.0;
  double target = 0.0;
  double residual = 0.0;
  TurningPoints turning;
  double quad_error_estimate = 0.0;
  int nodes_used = 0;
  bool degenerate = false;
};

/// Action at an arbitrary energy; target and residual are left at zero.
QuantizationResult action_at_energy(Family f, const ParamSet& p, SchemeKind s, double E);

/// action_at_energy without the parameter validity check, for algebraic
/// devices such as the half-step shifted parameter.
QuantizationResult action_at_energy_unchecked(Family f, const ParamSet& p, SchemeKind s,
                                              double E);

/// Action at E = exact_energy(n) with target (n + nu) pi hbar.
QuantizationResult action_integral(Family f, const ParamSet& p, int n, SchemeKind s);

/// Energy whose action equals (n + nu) pi hbar, to 1e-10 hbar in the action.
double solve_energy(Family f, const ParamSet& p, int n, SchemeKind s);

/// lim Q/|f1| at the singular endpoint, Q = sqrt(V_Langer - E) at one unit of
/// energy above the ground state. Equals |k - hbar/2| with k the endpoint's
/// singular coefficient.
double asymptotic_slope(Family f, const ParamSet& p, Endpoint side);

/// LangerWKB action at E_n assembled from the reference integrals.
struct AnalyticAction {
  closedform::Kind kind;
  double prefactor = 0.0;
  double y1 = 0.0;
  double y2 = 0.0;
  double value = 0.0;
};

AnalyticAction analytic_action(Family f, const ParamSet& p, int n);

struct SchemeCell {
  SchemeKind scheme;
  std::string status = "ok";  // "ok", "out-of-spectrum", or an error message
  double solved_energy = 0.0;
  double action = 0.0;
  double residual = 0.0;  // action at the exact energy minus target
};

struct SpectrumRow {
  int n = 0;
  std::string status = "ok";
  double exact = 0.0;
  std::vector<SchemeCell> cells;
};

struct SpectrumReport {
  Family family;
  ParamSet params;
  std::vector<SpectrumRow> rows;
};

SpectrumReport spectrum_report(Family f, const ParamSet& p, int n_max,
                               const std::vector<SchemeKind>& schemes);

}  // namespace siwkb
