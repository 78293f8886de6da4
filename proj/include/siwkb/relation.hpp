#pragma once

// Pointwise link between the Langer-corrected WKB integrand at (a, n) and
// the SWKB integrand at (a - hbar/2, n + 1/2).

#include "siwkb/potentials.hpp"
#include "siwkb/quantize.hpp"

namespace siwkb {

struct RelationSample {
  double x = 0.0;
  double lhs = 0.0;  // E_n(a) - V_Langer(x, a)
  double rhs = 0.0;  // E_{n+1/2}(a~) - W(x, a~)^2
  double residual = 0.0;
};

/// Same family constants with a -> a - hbar/2. Only the structural
/// requirements are checked (dg/da > 0 and, where the subclass fixes it, the
/// sign of a); failure throws ShiftedParameterError.
ParamSet shifted_params(Family f, const ParamSet& p);

/// g(a~ + (n + 1/2) hbar) - g(a~) = g(a + n hbar) - g(a - hbar/2).
double shifted_energy(Family f, const ParamSet& p, int n);

RelationSample relation_sample(Family f, const ParamSet& p, int n, double x);
double integrand_identity_residual(Family f, const ParamSet& p, int n, double x);

struct HalfShiftCheck {
  double langer = 0.0;   // LangerWKB action at (a, n)
  double shifted = 0.0;  // SWKB-form action at (a~, E_{n+1/2}(a~))
  double target = 0.0;   // (n + 1/2) pi hbar
};

HalfShiftCheck half_shift_action_check(Family f, const ParamSet& p, int n);

}  // namespace siwkb
