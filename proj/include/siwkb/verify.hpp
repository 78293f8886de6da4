#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "siwkb/closedform.hpp"
#include "siwkb/potentials.hpp"

namespace siwkb {

struct CheckResult {
  std::string check;
  std::string family;  // empty for family-independent checks
  PhysicalParams params;
  int n = -1;  // -1: aggregated over levels
  std::string scheme;
  double value = 0.0;      // worst deviation found
  double tolerance = 0.0;
  std::string comparison = "<=";  // ">" for checks that demand a deviation
  bool pass = false;
  bool units_hbar = false;
  std::string detail;
};

struct VerifyOptions {
  std::uint64_t seed = 0;
  double tol = 1e-8;       // action-type checks, in units of hbar
  bool oracle = true;      // include the Numerov cross-check
  int closedform_samples = 1000;
};

/// Seeded (y1, y2) pairs inside the kind's predicate, kept at least 0.05
/// away from any pole of the weight.
std::vector<std::pair<double, double>> closedform_samples(closedform::Kind k, std::uint64_t seed,
                                                          int count);

/// Full invariant suite over the seeded default grids, in canonical order
/// (family catalog order, parameter-set order, then the reference integrals).
std::vector<CheckResult> verify_suite(const VerifyOptions& opt);

}  // namespace siwkb
