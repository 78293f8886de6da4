#pragma once

// Catalog of the ten conventional (additive, hbar-independent) shape-invariant
// superpotentials. Every family is written as W(x, a) = a f1(x) + f2(x) + u(a)
// with u(a) = b / a for Class II and zero otherwise; units have 2m = 1.

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace siwkb {

enum class Family {
  harmonic,
  morse,
  coulomb,
  rosen_morse_trig,
  rosen_morse_hyp,
  eckart,
  oscillator_3d,
  scarf_trig,
  scarf_hyp,
  poschl_teller,
};

inline constexpr std::array<Family, 10> all_families{
    Family::harmonic,      Family::morse,          Family::coulomb,
    Family::rosen_morse_trig, Family::rosen_morse_hyp, Family::eckart,
    Family::oscillator_3d, Family::scarf_trig,     Family::scarf_hyp,
    Family::poschl_teller,
};

enum class ClassTag { IA, IB, IIA, IIB1, IIB2, IIB3, IIIA, IIIB1, IIIB2, IIIB3 };
enum class PotentialClass { I, II, III };

enum class Endpoint { left, right };

struct DomainSpec {
  double left;
  double right;
  bool singular_left;
  bool singular_right;

  /// Open-interval membership.
  bool contains(double x) const { return x > left && x < right; }
  bool infinite_left() const;
  bool infinite_right() const;
};

struct FamilyInfo {
  Family family;
  ClassTag tag;
  std::string_view key;   // kebab-case CLI name
  std::string_view name;  // canonical potential name
  std::string_view superpotential;
  std::string_view partner_potentials;
  std::string_view mapping;  // table-row parameters -> (a, b)
  std::string_view constraints;
  DomainSpec domain;
  std::vector<std::string_view> param_names;
  double lambda;  // f1' = f1^2 - lambda
  double alpha;   // Class I: f1 = alpha
  /// Window where the well lives for typical parameters; used for dense
  /// invariant grids, never for root finding.
  double window_left;
  double window_right;
};

const FamilyInfo& info(Family f);
std::optional<Family> family_from_key(std::string_view key);
std::string_view to_string(ClassTag tag);
PotentialClass potential_class(Family f);

/// Internal parameterization. `a` is the shape-invariance parameter,
/// `b` the Class II constant B or the Class IIIB coefficient of
/// sqrt|f1^2 - lambda|, `omega` the frequency of IA/IIIA. `epsilon`,
/// `lambda` and `alpha` are family constants filled in by make_params.
struct ParamSet {
  double a = 0.0;
  double b = 0.0;
  double omega = 0.0;
  double hbar = 1.0;
  double epsilon = 0.0;
  double lambda = 0.0;
  double alpha = 0.0;
};

using PhysicalParams = std::map<std::string, double>;

/// Builds the internal ParamSet from table-row parameters (e.g. {"A", "B"}).
/// Unknown or missing keys throw ValidationError. Does not run validate().
ParamSet make_params(Family f, const PhysicalParams& physical, double hbar = 1.0);

/// Inverse of make_params.
PhysicalParams physical_params(Family f, const ParamSet& p);

/// Same family constants, shape parameter replaced.
ParamSet with_a(const ParamSet& p, double a);

double superpotential(Family f, const ParamSet& p, double x);
/// dW/dx, closed form.
double superpotential_dx(Family f, const ParamSet& p, double x);
/// dW/da at fixed x, closed form.
double superpotential_da(Family f, const ParamSet& p, double x);

/// V- = W^2 - hbar W'.
double potential_minus(Family f, const ParamSet& p, double x);
/// V+ = W^2 + hbar W'.
double potential_plus(Family f, const ParamSet& p, double x);

std::pair<double, double> f1_and_derivative(Family f, const ParamSet& p, double x);
std::pair<double, double> f2_and_derivative(Family f, const ParamSet& p, double x);

/// Generalized Langer term hbar^2 f1' / 4.
double langer_term(Family f, const ParamSet& p, double x);

/// g(a) of the shape-invariance condition, evaluated at an arbitrary a.
double g_function(Family f, const ParamSet& p, double a);
double g_derivative(Family f, const ParamSet& p, double a);

/// g(a + level*hbar) - g(a) for real `level`; the half-integer continuation
/// is what the WKB/SWKB interrelation needs.
double level_energy(Family f, const ParamSet& p, double level);

/// E_n = g(a + n hbar) - g(a). Throws OutOfSpectrumError past the last level.
double exact_energy(Family f, const ParamSet& p, int n);

struct ValidityReport {
  bool valid = true;
  std::vector<std::string> violations;
};

ValidityReport validate(Family f, const ParamSet& p);

/// Throws ValidationError listing the violations if p is invalid.
void require_valid(Family f, const ParamSet& p);

struct BoundStateCount {
  std::optional<int> finite;  // empty => infinitely many levels

  bool is_infinite() const { return !finite.has_value(); }
  bool admits(int n) const { return n >= 0 && (is_infinite() || n < *finite); }
  std::string to_string() const;
};

BoundStateCount bound_state_count(Family f, const ParamSet& p);

/// Coefficient k with W ~ k f1 at a singular endpoint; the regular
/// solution there behaves as |f1|^(-k/hbar). Throws UnsupportedError for
/// a non-singular endpoint.
double singular_coefficient(Family f, const ParamSet& p, Endpoint side);

/// Dense interior grid over the family's window, clipped to the domain.
std::vector<double> interior_grid(Family f, int points);

/// max(1, |E_{n_max}|, sup over grid of |V-|).
double energy_scale(Family f, const ParamSet& p, int n_max, const std::vector<double>& grid);

/// Largest pointwise violations over `grid` of the shape-invariance
/// identity V+(x,a) + g(a) = V-(x,a+hbar) + g(a+hbar), the PDE
/// W dW/da - dW/dx + g'(a)/2 = 0, and the Riccati relations for f1 and f2
/// (f2 only for Classes I and III).
struct StructuralResiduals {
  double shape_invariance = 0.0;
  double pde = 0.0;
  double riccati_f1 = 0.0;
  double riccati_f2 = 0.0;
};

StructuralResiduals structural_residuals(Family f, const ParamSet& p,
                                         const std::vector<double>& grid);

}  // namespace siwkb
