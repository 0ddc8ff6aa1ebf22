#include "splitq/interference.hpp"

#include <cmath>

#include "splitq/errors.hpp"
#include "splitq/gnum.hpp"

namespace splitq {

namespace {

// Minimal complex pair, kept separate from std::complex so the identity
// check does not share code with anything it verifies.
struct Pair {
  double re;
  double im;
};

Pair times(Pair a, Pair b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

int check_sign(int sign) {
  if (sign != 1 && sign != -1) throw InvalidArgument("sign must be +-1");
  return sign;
}

}  // namespace

std::string_view regime_name(Regime r) {
  switch (r) {
    case Regime::kTrigonometric:
      return "trig";
    case Regime::kHyperbolic:
      return "hyp";
    case Regime::kBoundary:
      break;
  }
  return "boundary";
}

double trig_law(double p1, double p2, double theta) {
  return p1 + p2 + 2.0 * std::sqrt(p1 * p2) * std::cos(theta);
}

double hyp_law(double p1, double p2, double theta, int sign) {
  check_sign(sign);
  return p1 + p2 + 2.0 * sign * std::sqrt(p1 * p2) * expj(theta).x;
}

double trig_linearization_residual(double a, double b, double theta) {
  const double left = trig_law(a, b, theta);
  const double sb = std::sqrt(b);
  const Pair w{std::sqrt(a) + sb * std::cos(theta), sb * std::sin(theta)};
  const double right = times(w, Pair{w.re, -w.im}).re;
  return std::fabs(left - right);
}

double hyp_linearization_residual(double a, double b, double theta, int sign) {
  const double left = hyp_law(a, b, theta, sign);
  const GNum w = GNum{std::sqrt(a), 0.0} + expj(theta) * (sign * std::sqrt(b));
  const GNum sq = w * conj(w);
  return std::fabs(left - sq.x);
}

InterferenceVerdict classify(double p_prime, double p1, double p2) {
  if (!std::isfinite(p_prime) || !std::isfinite(p1) || !std::isfinite(p2)) {
    throw DegenerateInputs("classify: non-finite input");
  }
  if (!(p1 > 0.0) || !(p2 > 0.0)) {
    throw DegenerateInputs("classify: P1 and P2 must be positive");
  }
  InterferenceVerdict v;
  v.lambda = (p_prime - p1 - p2) / (2.0 * std::sqrt(p1 * p2));
  const double mag = std::fabs(v.lambda);
  if (!(mag <= std::cosh(kThetaMax))) {
    throw DegenerateInputs("classify: |lambda| beyond cosh(theta_max)");
  }
  if (mag < 1.0 - kEpsCls) {
    v.regime = Regime::kTrigonometric;
    v.theta = std::acos(v.lambda);
    v.sign = 1;
  } else if (mag > 1.0 + kEpsCls) {
    v.regime = Regime::kHyperbolic;
    v.theta = std::acosh(mag);
    v.sign = v.lambda > 0.0 ? 1 : -1;
  } else {
    v.regime = Regime::kBoundary;
    v.theta = 0.0;
    v.sign = v.lambda >= 0.0 ? 1 : -1;
  }
  return v;
}

}  // namespace splitq
