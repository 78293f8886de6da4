#include "siwkb/grids.hpp"

#include <algorithm>
#include <random>

namespace siwkb {

std::vector<PhysicalParams> default_grid(Family f) {
  switch (f) {
    case Family::harmonic:
      return {{{"omega", 0.5}}, {{"omega", 1.0}}, {{"omega", 2.0}}, {{"omega", 3.7}},
              {{"omega", 10.0}}};
    case Family::morse:
      return {{{"A", 1.5}}, {{"A", 2.5}}, {{"A", 3.4}}, {{"A", 4.6}}, {{"A", 5.5}}};
    case Family::coulomb:
      return {{{"l", 1.2}, {"e2", 2.0}},
              {{"l", 1.5}, {"e2", 1.0}},
              {{"l", 2.0}, {"e2", 3.0}},
              {{"l", 2.7}, {"e2", 1.4}},
              {{"l", 4.1}, {"e2", 5.0}}};
    case Family::rosen_morse_trig:
      return {{{"A", 1.2}, {"B", 0.5}},
              {{"A", 1.5}, {"B", -1.0}},
              {{"A", 2.0}, {"B", 2.0}},
              {{"A", 3.3}, {"B", 0.0}},
              {{"A", 5.0}, {"B", -3.5}}};
    case Family::rosen_morse_hyp:
      return {{{"A", 3.5}, {"B", 1.0}},
              {{"A", 4.0}, {"B", 2.0}},
              {{"A", 5.2}, {"B", -3.0}},
              {{"A", 2.4}, {"B", 0.5}},
              {{"A", 5.5}, {"B", 0.0}}};
    case Family::eckart:
      return {{{"A", 1.25}, {"B", 9.0}},
              {{"A", 1.2}, {"B", 22.0}},
              {{"A", 1.3}, {"B", 33.0}},
              {{"A", 1.6}, {"B", 50.0}},
              {{"A", 3.0}, {"B", 20.0}}};
    case Family::oscillator_3d:
      return {{{"l", 1.2}, {"omega", 1.0}},
              {{"l", 1.5}, {"omega", 0.5}},
              {{"l", 2.0}, {"omega", 2.0}},
              {{"l", 3.3}, {"omega", 1.5}},
              {{"l", 5.0}, {"omega", 0.7}}};
    case Family::scarf_trig:
      return {{{"A", 1.8}, {"B", 0.5}},
              {{"A", 2.0}, {"B", -0.8}},
              {{"A", 3.0}, {"B", 1.5}},
              {{"A", 4.0}, {"B", 0.0}},
              {{"A", 6.0}, {"B", -4.5}}};
    case Family::scarf_hyp:
      return {{{"A", 1.5}, {"B", 0.5}},
              {{"A", 2.5}, {"B", -1.0}},
              {{"A", 3.5}, {"B", 2.0}},
              {{"A", 4.5}, {"B", 0.0}},
              {{"A", 5.5}, {"B", -3.0}}};
    case Family::poschl_teller:
      return {{{"A", 1.5}, {"B", 3.0}},
              {{"A", 2.5}, {"B", 4.0}},
              {{"A", 3.5}, {"B", 5.0}},
              {{"A", 4.5}, {"B", 6.0}},
              {{"A", 5.5}, {"B", 8.0}}};
  }
  return {};
}

std::vector<PhysicalParams> jittered_grid(Family f, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  // std::uniform_real_distribution is implementation-defined; this keeps
  // reports identical across standard libraries
  auto uniform = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  std::vector<PhysicalParams> out;
  for (Family g : all_families) {
    for (const auto& base : default_grid(g)) {
      PhysicalParams jit = base;
      for (auto& [key, value] : jit) value *= 0.98 + 0.04 * uniform();
      if (g != f) continue;
      const bool ok = validate(g, make_params(g, jit)).valid;
      out.push_back(ok ? jit : base);
    }
  }
  return out;
}

int max_level(Family f, const ParamSet& p, int cap) {
  const auto count = bound_state_count(f, p);
  return count.is_infinite() ? cap : std::min(cap, *count.finite - 1);
}

}  // namespace siwkb
