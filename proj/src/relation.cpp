#include "siwkb/relation.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "siwkb/errors.hpp"

namespace siwkb {

ParamSet shifted_params(Family f, const ParamSet& p) {
  require_valid(f, p);
  const ParamSet q = with_a(p, p.a - 0.5 * p.hbar);
  const std::string key(info(f).key);
  if (!(g_derivative(f, q, q.a) > 0.0)) {
    throw ShiftedParameterError("dg/da > 0 fails at a - hbar/2 for " + key);
  }
  // subclasses whose f1 sign convention pins the sign of a
  switch (f) {
    case Family::coulomb:
    case Family::oscillator_3d:
      if (!(q.a > 0.0)) throw ShiftedParameterError("a - hbar/2 must stay positive for " + key);
      break;
    case Family::morse:
    case Family::rosen_morse_hyp:
    case Family::scarf_hyp:
    case Family::poschl_teller:
      if (!(q.a < 0.0)) throw ShiftedParameterError("a - hbar/2 must stay negative for " + key);
      break;
    default:
      break;
  }
  if (potential_class(f) == PotentialClass::II && q.a == 0.0) {
    throw ShiftedParameterError("a - hbar/2 vanishes for " + key);
  }
  return q;
}

double shifted_energy(Family f, const ParamSet& p, int n) {
  const ParamSet q = shifted_params(f, p);
  return level_energy(f, q, n + 0.5);
}

RelationSample relation_sample(Family f, const ParamSet& p, int n, double x) {
  const ParamSet q = shifted_params(f, p);
  RelationSample s;
  s.x = x;
  s.lhs = exact_energy(f, p, n) - effective_potential(f, p, SchemeKind::langer_wkb, x);
  const double w = superpotential(f, q, x);
  s.rhs = level_energy(f, q, n + 0.5) - w * w;
  s.residual = s.lhs - s.rhs;
  return s;
}

double integrand_identity_residual(Family f, const ParamSet& p, int n, double x) {
  return relation_sample(f, p, n, x).residual;
}

HalfShiftCheck half_shift_action_check(Family f, const ParamSet& p, int n) {
  const ParamSet q = shifted_params(f, p);
  HalfShiftCheck out;
  out.langer = action_integral(f, p, n, SchemeKind::langer_wkb).action;
  out.shifted = action_at_energy_unchecked(f, q, SchemeKind::swkb, level_energy(f, q, n + 0.5)).action;
  out.target = (n + 0.5) * std::numbers::pi * p.hbar;
  return out;
}

}  // namespace siwkb
