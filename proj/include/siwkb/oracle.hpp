#pragma once

// Shooting eigensolver for -hbar^2 psi'' + V- psi = E psi. Numerov steps on a
// grid uniform in a stretched coordinate y (x = X(y), psi = sqrt(X') u), which
// resolves the r^-2 cores of the radial families. Independent of the
// semiclassical machinery.

#include <utility>
#include <vector>

#include "siwkb/potentials.hpp"

namespace siwkb::oracle {

struct SolverConfig {
  int grid_points = 4000;
  double box_left = 0.0;
  double box_right = 0.0;
  double match_point = 0.0;
  std::pair<double, double> energy_bracket{0.0, 0.0};
  double tolerance = 1e-7;
  /// Decay integral \int sqrt(V - E)/hbar dx kept beyond the well on each
  /// non-singular side.
  double decay_margin = 30.0;
  int max_grid_points = 1 << 20;
};

/// Box, bracket and match point for level n. The exact spectrum is used only
/// as a sizing hint: the box must hold level n with margin, and the bracket
/// must contain it.
SolverConfig default_config(Family f, const ParamSet& p, int n);

/// Eigenvalue with n nodes. Refines the grid until successive doublings agree
/// to 0.5 * tolerance (the Numerov error left after the last doubling is about
/// a fifteenth of that), then repeats on a box with twice the decay margin and
/// throws TruncationError if that moves the result by more than tolerance.
double eigenvalue(Family f, const ParamSet& p, int n, const SolverConfig& cfg);
double eigenvalue(Family f, const ParamSet& p, int n);

/// Sign changes of the left-shot solution strictly inside the box.
int node_count(Family f, const ParamSet& p, double E, const SolverConfig& cfg);

struct Eigenstate {
  double energy = 0.0;
  std::vector<double> x;    // grid points where psi is defined
  std::vector<double> psi;  // unnormalized, continuous at the match point
};

Eigenstate eigenstate(Family f, const ParamSet& p, int n, const SolverConfig& cfg);

/// Log-log slope of psi against |f1| extrapolated to a singular endpoint from
/// the decade [1e-4, 1e-3] of the edge-to-well distance; the regular solution
/// gives -k/hbar.
struct LogSlope {
  double measured = 0.0;
  double expected = 0.0;
};

LogSlope singular_log_slope(Family f, const ParamSet& p, int n, Endpoint side);

}  // namespace siwkb::oracle
