#include "siwkb/closedform.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "siwkb/errors.hpp"
#include "siwkb/numerics.hpp"

namespace siwkb::closedform {

namespace {

constexpr double pi = std::numbers::pi;

void require(Kind k, double y1, double y2) {
  if (!satisfies(k, y1, y2)) {
    throw DomainError(std::string(name(k)) + " requires " + std::string(constraint(k)) +
                      "; got y1 = " + std::to_string(y1) + ", y2 = " + std::to_string(y2));
  }
}

}  // namespace

std::string_view name(Kind k) {
  switch (k) {
    case Kind::I0: return "I0";
    case Kind::I1a: return "I1a";
    case Kind::I1b: return "I1b";
    case Kind::I2a: return "I2a";
    case Kind::I2b: return "I2b";
    case Kind::I3: return "I3";
    case Kind::I4: return "I4";
    case Kind::I5a: return "I5a";
    case Kind::I5b: return "I5b";
  }
  return "?";
}

std::string_view constraint(Kind k) {
  switch (k) {
    case Kind::I0:
    case Kind::I3: return "y1 < y2";
    case Kind::I1a:
    case Kind::I2b: return "0 < y1 < y2";
    case Kind::I1b:
    case Kind::I2a: return "y1 < y2 < 0";
    case Kind::I4: return "-1 < y1 < y2 < 1";
    case Kind::I5a: return "1 < y1 < y2";
    case Kind::I5b: return "y1 < y2 < -1";
  }
  return "?";
}

bool satisfies(Kind k, double y1, double y2) {
  if (!std::isfinite(y1) || !std::isfinite(y2) || !(y1 < y2)) return false;
  switch (k) {
    case Kind::I0:
    case Kind::I3: return true;
    case Kind::I1a:
    case Kind::I2b: return y1 > 0.0;
    case Kind::I1b:
    case Kind::I2a: return y2 < 0.0;
    case Kind::I4: return y1 > -1.0 && y2 < 1.0;
    case Kind::I5a: return y1 > 1.0;
    case Kind::I5b: return y2 < -1.0;
  }
  return false;
}

double weight(Kind k, double y) {
  switch (k) {
    case Kind::I0: return 1.0;
    case Kind::I1a:
    case Kind::I1b: return y;
    case Kind::I2a:
    case Kind::I2b: return y * y;
    case Kind::I3: return 1.0 + y * y;
    case Kind::I4: return 1.0 - y * y;
    case Kind::I5a:
    case Kind::I5b: return y * y - 1.0;
  }
  return 1.0;
}

double evaluate(Kind k, double y1, double y2) {
  if (y1 == y2) return 0.0;
  require(k, y1, y2);
  const double a = y1, b = y2;
  switch (k) {
    case Kind::I0:
      return pi / 8.0 * (b - a) * (b - a);
    case Kind::I1a:
      return pi / 2.0 * (a + b) - pi * std::sqrt(a * b);
    case Kind::I1b:
      return pi / 2.0 * (a + b) + pi * std::sqrt(a * b);
    case Kind::I2a: {
      const double r = std::sqrt(a * b);
      return -pi * (b * r + a * (r + 2.0 * b)) / (2.0 * a * b);
    }
    case Kind::I2b: {
      const double r = std::sqrt(a * b);
      return pi * (a + b - 2.0 * r) / (2.0 * r);
    }
    case Kind::I3:
      return pi / std::sqrt(2.0) *
                 std::sqrt(std::sqrt(1.0 + a * a) * std::sqrt(1.0 + b * b) - a * b + 1.0) -
             pi;
    case Kind::I4:
      return pi / 2.0 * (2.0 - std::sqrt((1.0 - a) * (1.0 - b)) - std::sqrt((1.0 + a) * (1.0 + b)));
    case Kind::I5a:
      return pi / 2.0 * (std::sqrt((a + 1.0) * (b + 1.0)) - std::sqrt((a - 1.0) * (b - 1.0)) - 2.0);
    case Kind::I5b:
      return pi / 2.0 * (std::sqrt((a - 1.0) * (b - 1.0)) - std::sqrt((a + 1.0) * (b + 1.0)) - 2.0);
  }
  return 0.0;
}

double numeric_reference(Kind k, double y1, double y2) {
  if (y1 == y2) return 0.0;
  require(k, y1, y2);
  auto integrand = [&](double y) {
    const double s = (y2 - y) * (y - y1);
    return std::sqrt(s > 0.0 ? s : 0.0) / weight(k, y);
  };
  const double rough = integrate_cosine_map(integrand, y1, y2, INFINITY, 64, 128).value;
  return integrate_cosine_map(integrand, y1, y2, 1e-13 * (1.0 + std::abs(rough)), 64, 1 << 20)
      .value;
}

}  // namespace siwkb::closedform
