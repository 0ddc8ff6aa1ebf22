#include "splitq/gnum.hpp"

#include <string>

#include "splitq/errors.hpp"

namespace splitq {

GNum expj(double theta) {
  if (!std::isfinite(theta) || std::fabs(theta) > kThetaMax) {
    throw RangeError("expj: |theta| must not exceed " +
                     std::to_string(kThetaMax) + ", got " +
                     std::to_string(theta));
  }
  return {std::cosh(theta), std::sinh(theta)};
}

PolarG polar(const GNum& z) {
  const double n = norm_sq(z);
  if (!(n > 0.0)) {
    throw DegenerateNorm("polar: squared norm must be positive, got " +
                         std::to_string(n));
  }
  PolarG p;
  p.sign = z.x > 0.0 ? 1 : -1;
  p.modulus = std::sqrt(n);
  // asinh keeps the sign of theta; acosh of the real part would lose it.
  p.theta = std::asinh(z.y * p.sign / p.modulus);
  return p;
}

GNum reconstruct(const PolarG& p) {
  return expj(p.theta) * (p.sign * p.modulus);
}

GNum invert(const GNum& z) {
  const double n = norm_sq(z);
  if (!(n > 0.0)) {
    throw DegenerateNorm("invert: zero divisor or light-cone element");
  }
  // Equivalent to (sign x / |z|) e^{-j theta}, without the transcendental
  // round trip.
  return conj(z) * (1.0 / n);
}

}  // namespace splitq
