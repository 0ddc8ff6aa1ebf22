#pragma once

// Hyperbolic (split-complex) numbers z = x + j y with j^2 = 1.
//
// The squared norm |z|^2 = z * conj(z) = x^2 - y^2 is indefinite. Elements
// with |z|^2 >= 0 form the multiplicative semigroup G+, on which Born
// probabilities make sense; elements with |z|^2 > 0 have a polar form
// z = sign(x) |z| e^{j theta} and a multiplicative inverse.

#include <cmath>

namespace splitq {

// Equality tolerance used by assertions and validity checks.
inline constexpr double kEpsAlg = 1e-9;
// Default tolerance for G+ membership.
inline constexpr double kEpsMem = 1e-12;
// cosh overflows double near 710; leave headroom for products.
inline constexpr double kThetaMax = 300.0;

struct GNum {
  double x = 0.0;  // real part
  double y = 0.0;  // j part

  constexpr GNum() = default;
  constexpr GNum(double real, double jpart) : x(real), y(jpart) {}

  constexpr GNum& operator+=(const GNum& o) {
    x += o.x;
    y += o.y;
    return *this;
  }
  constexpr GNum& operator-=(const GNum& o) {
    x -= o.x;
    y -= o.y;
    return *this;
  }
  constexpr GNum& operator*=(const GNum& o) {
    const double nx = x * o.x + y * o.y;
    const double ny = x * o.y + o.x * y;
    x = nx;
    y = ny;
    return *this;
  }
  constexpr GNum& operator*=(double s) {
    x *= s;
    y *= s;
    return *this;
  }

  friend constexpr bool operator==(const GNum&, const GNum&) = default;
};

constexpr GNum operator+(GNum a, const GNum& b) { return a += b; }
constexpr GNum operator-(GNum a, const GNum& b) { return a -= b; }
constexpr GNum operator-(const GNum& a) { return {-a.x, -a.y}; }
constexpr GNum operator*(GNum a, const GNum& b) { return a *= b; }
constexpr GNum operator*(GNum a, double s) { return a *= s; }
constexpr GNum operator*(double s, GNum a) { return a *= s; }

constexpr GNum add(const GNum& a, const GNum& b) { return a + b; }
constexpr GNum mul(const GNum& a, const GNum& b) { return a * b; }
constexpr GNum conj(const GNum& z) { return {z.x, -z.y}; }

// x^2 - y^2, evaluated as (x - y)(x + y) so that elements near the light
// cone keep their relative accuracy. Light-cone inputs give exactly 0.
constexpr double norm_sq(const GNum& z) { return (z.x - z.y) * (z.x + z.y); }

// |z|^2 >= -tol.
constexpr bool in_g_plus(const GNum& z, double tol = kEpsMem) {
  return norm_sq(z) >= -tol;
}

inline bool is_finite(const GNum& z) {
  return std::isfinite(z.x) && std::isfinite(z.y);
}

// Componentwise max-abs distance; the metric used by all tolerance checks.
inline double distance(const GNum& a, const GNum& b) {
  return std::fmax(std::fabs(a.x - b.x), std::fabs(a.y - b.y));
}

// Polar form of an element with positive squared norm.
struct PolarG {
  int sign = 1;         // sign of the real part, +1 or -1
  double modulus = 1.;  // sqrt(|z|^2) > 0
  double theta = 0.;    // hyperbolic phase, unbounded
};

// cosh(theta) + j sinh(theta). Throws RangeError for |theta| > kThetaMax
// or non-finite theta.
GNum expj(double theta);

// Throws DegenerateNorm when norm_sq(z) <= 0.
PolarG polar(const GNum& z);

// sign * modulus * expj(theta).
GNum reconstruct(const PolarG& p);

// Throws DegenerateNorm when norm_sq(z) <= 0 (zero divisors and the
// light cone have no inverse).
GNum invert(const GNum& z);

}  // namespace splitq
