#pragma once

// Interference laws for two alternatives with probabilities P1, P2:
//   trigonometric  P' = P1 + P2 + 2 sqrt(P1 P2) cos theta
//   hyperbolic     P' = P1 + P2 +- 2 sqrt(P1 P2) cosh theta
// and a classifier that inverts them from a measured triple.

#include <string_view>

namespace splitq {

// Half-width of the |lambda| = 1 band where both laws coincide.
inline constexpr double kEpsCls = 1e-9;

enum class Regime { kTrigonometric, kHyperbolic, kBoundary };

// "trig", "hyp", "boundary".
std::string_view regime_name(Regime r);

struct InterferenceVerdict {
  Regime regime = Regime::kBoundary;
  double theta = 0.0;  // >= 0
  int sign = 1;
  double lambda = 1.0;  // (P' - P1 - P2) / (2 sqrt(P1 P2))
};

double trig_law(double p1, double p2, double theta);

// Throws RangeError for |theta| > kThetaMax.
double hyp_law(double p1, double p2, double theta, int sign);

// |A + B + 2 sqrt(AB) cos theta - |sqrt A + sqrt B e^{i theta}|^2|, with the
// right side evaluated in ordered-pair complex arithmetic.
double trig_linearization_residual(double a, double b, double theta);

// |A + B +- 2 sqrt(AB) cosh theta - |sqrt A +- sqrt B e^{j theta}|^2|, with
// the right side evaluated through the hyperbolic squared norm.
double hyp_linearization_residual(double a, double b, double theta, int sign);

// Regime by |lambda| against 1 -+ kEpsCls. Trigonometric: theta =
// acos(lambda), sign +1. Hyperbolic: theta = acosh|lambda|, sign of lambda.
// Boundary: theta 0, sign of lambda.
// Throws DegenerateInputs if P1 <= 0, P2 <= 0, an input is non-finite or
// |lambda| > cosh(kThetaMax).
InterferenceVerdict classify(double p_prime, double p1, double p2);

}  // namespace splitq
