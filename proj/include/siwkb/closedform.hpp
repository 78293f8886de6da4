#pragma once

// The nine reference integrals
//   I(y1, y2) = \int_{y1}^{y2} sqrt((y2 - y)(y - y1)) / w(y) dy
// with w = 1 (I0), y (I1a, I1b), y^2 (I2a, I2b), 1 + y^2 (I3),
// 1 - y^2 (I4), y^2 - 1 (I5a, I5b).

#include <array>
#include <string_view>

namespace siwkb::closedform {

enum class Kind { I0, I1a, I1b, I2a, I2b, I3, I4, I5a, I5b };

inline constexpr std::array<Kind, 9> all_kinds{Kind::I0,  Kind::I1a, Kind::I1b,
                                               Kind::I2a, Kind::I2b, Kind::I3,
                                               Kind::I4,  Kind::I5a, Kind::I5b};

std::string_view name(Kind k);
/// Human-readable domain predicate, e.g. "0 < y1 < y2".
std::string_view constraint(Kind k);
bool satisfies(Kind k, double y1, double y2);

/// Closed form. y1 == y2 gives 0; otherwise the kind's predicate must hold
/// or DomainError is thrown.
double evaluate(Kind k, double y1, double y2);

/// Direct quadrature of the defining integral.
double numeric_reference(Kind k, double y1, double y2);

double weight(Kind k, double y);

}  // namespace siwkb::closedform
