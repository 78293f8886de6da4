#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "siwkb/potentials.hpp"

namespace siwkb {

/// Five hard-coded parameter sets per family (hbar = 1), each inside every
/// validity bound by at least 0.2, and with the last bound level and the
/// first unbound one at least 0.25 away from the binding threshold in a.
std::vector<PhysicalParams> default_grid(Family f);

/// The default grid with every parameter scaled by a factor in [0.98, 1.02]
/// drawn from a 64-bit Mersenne twister seeded with `seed`. A jittered set
/// that fails validation falls back to the unjittered one. Families are
/// jittered in catalog order so the result depends only on the seed.
std::vector<PhysicalParams> jittered_grid(Family f, std::uint64_t seed);

/// Highest level index checked for a family/parameter set: min(cap, count-1).
int max_level(Family f, const ParamSet& p, int cap);

}  // namespace siwkb
