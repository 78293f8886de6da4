#include "siwkb/potentials.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "siwkb/errors.hpp"

namespace siwkb {

namespace {

constexpr double inf = std::numeric_limits<double>::infinity();
constexpr double pi = std::numbers::pi;

const std::array<FamilyInfo, 10>& catalog() {
  static const std::array<FamilyInfo, 10> table{{
      {Family::harmonic, ClassTag::IA, "harmonic", "Harmonic Oscillator", "W = omega x / 2",
       "V± = omega^2 x^2 / 4 ± hbar omega / 2", "f2 = omega x / 2, epsilon = -omega/2, a unused",
       "omega > 0", DomainSpec{-inf, inf, false, false}, {"omega"}, 0.0, 0.0, -8.0, 8.0},
      {Family::morse, ClassTag::IB, "morse", "Morse", "W = A - exp(-x)",
       "V± = A^2 - (2A ∓ hbar) exp(-x) + exp(-2x)", "a = -A, alpha = -1, f2 = -exp(-x)", "A > 0",
       DomainSpec{-inf, inf, false, false}, {"A"}, 1.0, -1.0, -2.0, 12.0},
      {Family::coulomb, ClassTag::IIA, "coulomb", "Coulomb", "W = -l/r + e2/(2 l)",
       "V± = -e2/r + l(l ± hbar)/r^2 + e2^2/(4 l^2)", "a = l, b = e2/2, f1 = -1/r",
       "l > hbar/2, e2 > 0", DomainSpec{0.0, inf, true, false}, {"l", "e2"}, 0.0, 0.0, 0.0, 40.0},
      {Family::rosen_morse_trig, ClassTag::IIB1, "rosen-morse-trig", "Rosen-Morse (Trigonometric)",
       "W = -A cot x - B/A", "V± = A(A ± hbar) csc^2 x + 2B cot x + B^2/A^2 - A^2",
       "a = A, b = -B, f1 = -cot x", "A > hbar/2", DomainSpec{0.0, pi, true, true}, {"A", "B"},
       -1.0, 0.0, 0.0, pi},
      {Family::rosen_morse_hyp, ClassTag::IIB2, "rosen-morse-hyp", "Rosen-Morse (Hyperbolic)",
       "W = A tanh x + B/A", "V± = -A(A ∓ hbar) sech^2 x + 2B tanh x + B^2/A^2 + A^2",
       "a = -A, b = -B, f1 = -tanh x", "A > 0, |B| < A^2", DomainSpec{-inf, inf, false, false},
       {"A", "B"}, 1.0, 0.0, -8.0, 8.0},
      {Family::eckart, ClassTag::IIB3, "eckart", "Eckart", "W = -A coth r + B/A",
       "V± = A(A ± hbar) csch^2 r - 2B coth r + B^2/A^2 + A^2", "a = A, b = B, f1 = -coth r",
       "A > hbar/2, B > A^2", DomainSpec{0.0, inf, true, false}, {"A", "B"}, 1.0, 0.0, 0.0, 12.0},
      {Family::oscillator_3d, ClassTag::IIIA, "oscillator-3d", "3D-Oscillator",
       "W = omega r / 2 - l/r", "V± = omega^2 r^2/4 + l(l ± hbar)/r^2 - (l ∓ hbar/2) omega",
       "a = l, f1 = -1/r, f2 = omega r / 2, epsilon = -omega", "l > hbar/2, omega > 0",
       DomainSpec{0.0, inf, true, false}, {"l", "omega"}, 0.0, 0.0, 0.0, 8.0},
      {Family::scarf_trig, ClassTag::IIIB1, "scarf-trig", "Scarf (Trigonometric)",
       "W = A tan x - B sec x",
       "V± = (A(A ± hbar) + B^2) sec^2 x - B(2A ± hbar) tan x sec x - A^2",
       "a = A, b = -B, f1 = tan x, f2 = b sec x", "A > |B| + hbar/2",
       DomainSpec{-pi / 2, pi / 2, true, true}, {"A", "B"}, -1.0, 0.0, -pi / 2, pi / 2},
      {Family::scarf_hyp, ClassTag::IIIB2, "scarf-hyp", "Scarf (Hyperbolic)",
       "W = A tanh x + B sech x",
       "V± = -(A(A ∓ hbar) - B^2) sech^2 x + B(2A ∓ hbar) tanh x sech x + A^2",
       "a = -A, b = B, f1 = -tanh x, f2 = b sech x", "A > hbar/2",
       DomainSpec{-inf, inf, false, false}, {"A", "B"}, 1.0, 0.0, -8.0, 8.0},
      {Family::poschl_teller, ClassTag::IIIB3, "poschl-teller", "Poschl-Teller (Hyperbolic)",
       "W = A coth r - B csch r",
       "V± = (A(A ∓ hbar) + B^2) csch^2 r - B(2A ∓ hbar) coth r csch r + A^2",
       "a = -A, b = -B, f1 = -coth r, f2 = b csch r", "A > 0, B - A > hbar/2",
       DomainSpec{0.0, inf, true, false}, {"A", "B"}, 1.0, 0.0, 0.0, 10.0},
  }};
  return table;
}

struct Basis {
  double f1, df1, f2, df2;
};

void check_domain(Family f, double x) {
  const auto& d = info(f).domain;
  if (!(x > d.left && x < d.right)) {
    std::ostringstream os;
    os << "x = " << x << " outside the open domain (" << d.left << ", " << d.right << ") of "
       << info(f).key;
    throw DomainError(os.str());
  }
}

Basis basis(Family f, const ParamSet& p, double x) {
  check_domain(f, x);
  switch (f) {
    case Family::harmonic:
      return {0.0, 0.0, 0.5 * p.omega * x, 0.5 * p.omega};
    case Family::morse: {
      const double e = std::exp(-x);
      return {p.alpha, 0.0, -e, e};
    }
    case Family::coulomb: {
      const double inv = 1.0 / x;
      return {-inv, inv * inv, 0.0, 0.0};
    }
    case Family::rosen_morse_trig: {
      const double s = std::sin(x);
      const double cot = std::cos(x) / s;
      return {-cot, 1.0 / (s * s), 0.0, 0.0};
    }
    case Family::rosen_morse_hyp: {
      const double t = std::tanh(x);
      const double sech = 1.0 / std::cosh(x);
      return {-t, -sech * sech, 0.0, 0.0};
    }
    case Family::eckart: {
      const double csch = 1.0 / std::sinh(x);
      const double coth = 1.0 / std::tanh(x);
      return {-coth, csch * csch, 0.0, 0.0};
    }
    case Family::oscillator_3d: {
      const double inv = 1.0 / x;
      return {-inv, inv * inv, 0.5 * p.omega * x, 0.5 * p.omega};
    }
    case Family::scarf_trig: {
      const double c = std::cos(x);
      const double t = std::sin(x) / c;
      const double sec = 1.0 / c;
      return {t, sec * sec, p.b * sec, p.b * sec * t};
    }
    case Family::scarf_hyp: {
      const double t = std::tanh(x);
      const double sech = 1.0 / std::cosh(x);
      return {-t, -sech * sech, p.b * sech, -p.b * sech * t};
    }
    case Family::poschl_teller: {
      const double csch = 1.0 / std::sinh(x);
      const double coth = 1.0 / std::tanh(x);
      return {-coth, csch * csch, p.b * csch, -p.b * csch * coth};
    }
  }
  throw UnsupportedError("unknown family");
}

double u_of_a(Family f, const ParamSet& p, double a) {
  return potential_class(f) == PotentialClass::II ? p.b / a : 0.0;
}

std::string fmt_double(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

}  // namespace

bool DomainSpec::infinite_left() const { return std::isinf(left); }
bool DomainSpec::infinite_right() const { return std::isinf(right); }

const FamilyInfo& info(Family f) { return catalog()[static_cast<std::size_t>(f)]; }

std::optional<Family> family_from_key(std::string_view key) {
  for (const auto& row : catalog()) {
    if (row.key == key) return row.family;
  }
  return std::nullopt;
}

std::string_view to_string(ClassTag tag) {
  switch (tag) {
    case ClassTag::IA: return "IA";
    case ClassTag::IB: return "IB";
    case ClassTag::IIA: return "IIA";
    case ClassTag::IIB1: return "IIB1";
    case ClassTag::IIB2: return "IIB2";
    case ClassTag::IIB3: return "IIB3";
    case ClassTag::IIIA: return "IIIA";
    case ClassTag::IIIB1: return "IIIB1";
    case ClassTag::IIIB2: return "IIIB2";
    case ClassTag::IIIB3: return "IIIB3";
  }
  return "?";
}

PotentialClass potential_class(Family f) {
  switch (info(f).tag) {
    case ClassTag::IA:
    case ClassTag::IB:
      return PotentialClass::I;
    case ClassTag::IIA:
    case ClassTag::IIB1:
    case ClassTag::IIB2:
    case ClassTag::IIB3:
      return PotentialClass::II;
    default:
      return PotentialClass::III;
  }
}

ParamSet make_params(Family f, const PhysicalParams& physical, double hbar) {
  const auto& row = info(f);
  for (const auto& [key, value] : physical) {
    if (std::find(row.param_names.begin(), row.param_names.end(), key) == row.param_names.end()) {
      throw ValidationError("unknown parameter '" + key + "' for " + std::string(row.key));
    }
  }
  auto get = [&](std::string_view key) {
    auto it = physical.find(std::string(key));
    if (it == physical.end()) {
      throw ValidationError("missing parameter '" + std::string(key) + "' for " +
                            std::string(row.key));
    }
    return it->second;
  };

  ParamSet p;
  p.hbar = hbar;
  p.lambda = row.lambda;
  p.alpha = row.alpha;
  switch (f) {
    case Family::harmonic:
      p.omega = get("omega");
      p.epsilon = -0.5 * p.omega;
      p.a = 0.0;
      break;
    case Family::morse:
      p.a = -get("A");
      break;
    case Family::coulomb:
      p.a = get("l");
      p.b = 0.5 * get("e2");
      break;
    case Family::rosen_morse_trig:
      p.a = get("A");
      p.b = -get("B");
      break;
    case Family::rosen_morse_hyp:
      p.a = -get("A");
      p.b = -get("B");
      break;
    case Family::eckart:
      p.a = get("A");
      p.b = get("B");
      break;
    case Family::oscillator_3d:
      p.a = get("l");
      p.omega = get("omega");
      p.epsilon = -p.omega;
      break;
    case Family::scarf_trig:
      p.a = get("A");
      p.b = -get("B");
      break;
    case Family::scarf_hyp:
      p.a = -get("A");
      p.b = get("B");
      break;
    case Family::poschl_teller:
      p.a = -get("A");
      p.b = -get("B");
      break;
  }
  return p;
}

PhysicalParams physical_params(Family f, const ParamSet& p) {
  switch (f) {
    case Family::harmonic: return {{"omega", p.omega}};
    case Family::morse: return {{"A", -p.a}};
    case Family::coulomb: return {{"l", p.a}, {"e2", 2.0 * p.b}};
    case Family::rosen_morse_trig: return {{"A", p.a}, {"B", -p.b}};
    case Family::rosen_morse_hyp: return {{"A", -p.a}, {"B", -p.b}};
    case Family::eckart: return {{"A", p.a}, {"B", p.b}};
    case Family::oscillator_3d: return {{"l", p.a}, {"omega", p.omega}};
    case Family::scarf_trig: return {{"A", p.a}, {"B", -p.b}};
    case Family::scarf_hyp: return {{"A", -p.a}, {"B", p.b}};
    case Family::poschl_teller: return {{"A", -p.a}, {"B", -p.b}};
  }
  return {};
}

ParamSet with_a(const ParamSet& p, double a) {
  ParamSet q = p;
  q.a = a;
  return q;
}

double superpotential(Family f, const ParamSet& p, double x) {
  const Basis s = basis(f, p, x);
  return p.a * s.f1 + s.f2 + u_of_a(f, p, p.a);
}

double superpotential_dx(Family f, const ParamSet& p, double x) {
  const Basis s = basis(f, p, x);
  return p.a * s.df1 + s.df2;
}

double superpotential_da(Family f, const ParamSet& p, double x) {
  const Basis s = basis(f, p, x);
  if (potential_class(f) == PotentialClass::II) return s.f1 - p.b / (p.a * p.a);
  return s.f1;
}

double potential_minus(Family f, const ParamSet& p, double x) {
  const Basis s = basis(f, p, x);
  const double w = p.a * s.f1 + s.f2 + u_of_a(f, p, p.a);
  const double dw = p.a * s.df1 + s.df2;
  return w * w - p.hbar * dw;
}

double potential_plus(Family f, const ParamSet& p, double x) {
  const Basis s = basis(f, p, x);
  const double w = p.a * s.f1 + s.f2 + u_of_a(f, p, p.a);
  const double dw = p.a * s.df1 + s.df2;
  return w * w + p.hbar * dw;
}

std::pair<double, double> f1_and_derivative(Family f, const ParamSet& p, double x) {
  const Basis s = basis(f, p, x);
  return {s.f1, s.df1};
}

std::pair<double, double> f2_and_derivative(Family f, const ParamSet& p, double x) {
  const Basis s = basis(f, p, x);
  return {s.f2, s.df2};
}

double langer_term(Family f, const ParamSet& p, double x) {
  const Basis s = basis(f, p, x);
  return 0.25 * p.hbar * p.hbar * s.df1;
}

double g_function(Family f, const ParamSet& p, double a) {
  switch (info(f).tag) {
    case ClassTag::IA:
    case ClassTag::IB:
      return -a * (p.alpha * p.alpha * a + 2.0 * p.epsilon);
    case ClassTag::IIA:
    case ClassTag::IIB1:
    case ClassTag::IIB2:
    case ClassTag::IIB3:
      return -p.b * p.b / (a * a) - p.lambda * a * a;
    case ClassTag::IIIA:
      return 2.0 * p.omega * a;
    case ClassTag::IIIB1:
    case ClassTag::IIIB2:
    case ClassTag::IIIB3:
      return -p.lambda * a * a;
  }
  return 0.0;
}

double g_derivative(Family f, const ParamSet& p, double a) {
  switch (info(f).tag) {
    case ClassTag::IA:
    case ClassTag::IB:
      return -2.0 * (p.alpha * p.alpha * a + p.epsilon);
    case ClassTag::IIA:
    case ClassTag::IIB1:
    case ClassTag::IIB2:
    case ClassTag::IIB3:
      return 2.0 * p.b * p.b / (a * a * a) - 2.0 * p.lambda * a;
    case ClassTag::IIIA:
      return 2.0 * p.omega;
    case ClassTag::IIIB1:
    case ClassTag::IIIB2:
    case ClassTag::IIIB3:
      return -2.0 * p.lambda * a;
  }
  return 0.0;
}

double level_energy(Family f, const ParamSet& p, double level) {
  return g_function(f, p, p.a + level * p.hbar) - g_function(f, p, p.a);
}

double exact_energy(Family f, const ParamSet& p, int n) {
  const auto count = bound_state_count(f, p);
  if (!count.admits(n)) {
    throw OutOfSpectrumError("level n = " + std::to_string(n) + " is not bound for " +
                             std::string(info(f).key) + " (bound states: " + count.to_string() +
                             ")");
  }
  if (n == 0) return 0.0;
  return level_energy(f, p, static_cast<double>(n));
}

ValidityReport validate(Family f, const ParamSet& p) {
  ValidityReport report;
  auto fail = [&](std::string why) {
    report.valid = false;
    report.violations.push_back(std::move(why));
  };
  const auto& row = info(f);

  for (double v : {p.a, p.b, p.omega, p.hbar, p.epsilon, p.lambda, p.alpha}) {
    if (!std::isfinite(v)) {
      fail("all parameters must be finite");
      return report;
    }
  }
  if (!(p.hbar > 0.0)) fail("hbar > 0 violated");
  if (p.lambda != row.lambda) fail("lambda must equal the family constant " + fmt_double(row.lambda));
  if (p.alpha != row.alpha) fail("alpha must equal the family constant " + fmt_double(row.alpha));
  if (!report.valid) return report;

  const double h = p.hbar;
  const double half = 0.5 * h;
  switch (f) {
    case Family::harmonic:
      if (!(p.omega > 0.0)) fail("omega > 0 violated");
      if (p.epsilon != -0.5 * p.omega) fail("epsilon = -omega/2 violated");
      break;
    case Family::morse:
      if (!(-p.a > 0.0)) fail("A > 0 violated (unbroken SUSY)");
      if (p.epsilon != 0.0) fail("epsilon = 0 violated");
      break;
    case Family::coulomb:
      if (!(p.a > half)) fail("a > ħ/2 violated (l > hbar/2)");
      if (!(p.b > 0.0)) fail("e2 > 0 violated (B > 0 for unbroken SUSY)");
      break;
    case Family::rosen_morse_trig:
      if (!(p.a > half)) fail("a > ħ/2 violated (A > hbar/2)");
      break;
    case Family::rosen_morse_hyp:
      if (!(p.a < 0.0)) fail("a < 0 violated (A > 0)");
      if (!(std::abs(p.b) < p.a * p.a)) fail("|B| < A^2 violated (unbroken SUSY)");
      break;
    case Family::eckart:
      if (!(p.a > half)) fail("a > ħ/2 violated (A > hbar/2)");
      if (!(p.b > p.a * p.a)) fail("B > A^2 violated (unbroken SUSY)");
      break;
    case Family::oscillator_3d:
      if (!(p.a > half)) fail("a > ħ/2 violated (l > hbar/2)");
      if (!(p.omega > 0.0)) fail("omega > 0 violated");
      if (p.epsilon != -p.omega) fail("epsilon = -omega violated");
      break;
    case Family::scarf_trig:
      if (!(p.a > std::abs(p.b) + half)) fail("a > |B| + ħ/2 violated (A > |B| + hbar/2)");
      break;
    case Family::scarf_hyp:
      if (!(-p.a > half)) fail("A > ħ/2 violated");
      break;
    case Family::poschl_teller:
      if (!(-p.a > 0.0)) fail("A > 0 violated");
      if (!(p.a - p.b - half > 0.0)) fail("a - B - ħ/2 > 0 violated (B - A > hbar/2)");
      break;
  }
  if (!(g_derivative(f, p, p.a) > 0.0)) fail("dg/da > 0 violated at a (level crossing)");
  return report;
}

void require_valid(Family f, const ParamSet& p) {
  const auto report = validate(f, p);
  if (report.valid) return;
  std::string msg = "invalid parameters for " + std::string(info(f).key) + ": ";
  for (std::size_t i = 0; i < report.violations.size(); ++i)
    msg += (i ? "; " : "") + report.violations[i];
  throw ValidationError(msg);
}

std::string BoundStateCount::to_string() const {
  return is_infinite() ? std::string("infinite") : std::to_string(*finite);
}

BoundStateCount bound_state_count(Family f, const ParamSet& p) {
  require_valid(f, p);
  switch (f) {
    case Family::harmonic:
    case Family::coulomb:
    case Family::rosen_morse_trig:
    case Family::oscillator_3d:
    case Family::scarf_trig:
      return {};
    default:
      break;
  }
  // Finite families: level n exists while a + n hbar stays on the
  // level-crossing-free side and, where the subclass demands it, below zero.
  const bool needs_negative = f != Family::eckart;
  int n = 0;
  constexpr int cap = 1'000'000;
  while (n < cap) {
    const double an = p.a + n * p.hbar;
    if (!(g_derivative(f, p, an) > 0.0)) break;
    if (needs_negative && !(an < 0.0)) break;
    ++n;
  }
  return BoundStateCount{n};
}

double singular_coefficient(Family f, const ParamSet& p, Endpoint side) {
  const auto& d = info(f).domain;
  const bool singular = side == Endpoint::left ? d.singular_left : d.singular_right;
  if (!singular) {
    throw UnsupportedError(std::string(info(f).key) + " has no singular " +
                           (side == Endpoint::left ? "left" : "right") + " endpoint");
  }
  switch (f) {
    case Family::scarf_trig:
      // W / f1 = a + b / sin x
      return side == Endpoint::left ? p.a - p.b : p.a + p.b;
    case Family::poschl_teller:
      // W / f1 = a - b sech r
      return p.a - p.b;
    default:
      return p.a;
  }
}

std::vector<double> interior_grid(Family f, int points) {
  const auto& row = info(f);
  const double width = row.window_right - row.window_left;
  double lo = row.window_left;
  double hi = row.window_right;
  if (!row.domain.infinite_left() && lo <= row.domain.left) lo = row.domain.left + 0.01 * width;
  if (!row.domain.infinite_right() && hi >= row.domain.right) hi = row.domain.right - 0.01 * width;
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) {
    grid.push_back(lo + (hi - lo) * i / (points - 1));
  }
  return grid;
}

double energy_scale(Family f, const ParamSet& p, int n_max, const std::vector<double>& grid) {
  double scale = 1.0;
  const auto count = bound_state_count(f, p);
  int top = n_max;
  if (!count.is_infinite()) top = std::min(top, *count.finite - 1);
  if (top >= 0) scale = std::max(scale, std::abs(exact_energy(f, p, top)));
  for (double x : grid) scale = std::max(scale, std::abs(potential_minus(f, p, x)));
  return scale;
}

StructuralResiduals structural_residuals(Family f, const ParamSet& p,
                                         const std::vector<double>& grid) {
  require_valid(f, p);
  const ParamSet up = with_a(p, p.a + p.hbar);
  const double g0 = g_function(f, p, p.a), g1 = g_function(f, p, up.a);
  const double dg = g_derivative(f, p, p.a);
  const auto cls = potential_class(f);
  StructuralResiduals r;
  for (double x : grid) {
    r.shape_invariance = std::max(
        r.shape_invariance, std::abs(potential_plus(f, p, x) + g0 - potential_minus(f, up, x) - g1));
    const double w = superpotential(f, p, x);
    r.pde = std::max(r.pde, std::abs(w * superpotential_da(f, p, x) - superpotential_dx(f, p, x) +
                                     0.5 * dg));
    const auto [f1, df1] = f1_and_derivative(f, p, x);
    r.riccati_f1 = std::max(r.riccati_f1, std::abs(df1 - (f1 * f1 - p.lambda)));
    if (cls != PotentialClass::II) {
      const auto [f2, df2] = f2_and_derivative(f, p, x);
      const double slope = cls == PotentialClass::I ? p.alpha : f1;
      r.riccati_f2 = std::max(r.riccati_f2, std::abs(df2 - (slope * f2 - p.epsilon)));
    }
  }
  return r;
}

}  // namespace siwkb
