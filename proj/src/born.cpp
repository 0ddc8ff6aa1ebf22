#include "splitq/born.hpp"

#include <cmath>
#include <string>

#include "splitq/errors.hpp"

namespace splitq {

namespace {

bool is_unit_sign(int s) { return s == 1 || s == -1; }

bool is_zero(const GNum& z, double tol) {
  return std::fabs(z.x) <= tol && std::fabs(z.y) <= tol;
}

double checked_cosh(double theta) { return expj(theta).x; }

}  // namespace

StateDecomposition decompose(const GVec2& phi, double tol) {
  const double total = norm_sq(phi);
  if (!(std::fabs(total - 1.0) <= tol)) {
    throw NotNormalized("decompose: |beta_1|^2 + |beta_2|^2 = " +
                        std::to_string(total));
  }
  StateDecomposition d;
  d.coefficients = phi;
  d.decomposable = in_g_plus(phi.c1, tol) && in_g_plus(phi.c2, tol);
  if (d.decomposable) {
    d.probabilities = std::array<double, 2>{norm_sq(phi.c1), norm_sq(phi.c2)};
  }
  for (int i = 0; i < 2; ++i) {
    if (norm_sq(phi[i]) > kEpsMem) {
      const PolarG pg = polar(phi[i]);
      d.phases[i] = CoefficientPhase{pg.sign, pg.theta};
    }
  }
  return d;
}

GNum amplitude(int sign, double q, double xi) {
  if (!is_unit_sign(sign)) throw InvalidArgument("amplitude: sign must be +-1");
  if (!(q >= 0.0)) throw InvalidArgument("amplitude: q must be >= 0");
  return expj(xi) * (sign * std::sqrt(q));
}

void validate(const ProbModel& m) {
  if (!is_unit_sign(m.eps1)) throw InvalidArgument("ProbModel: eps1 must be +-1");
  if (!std::isfinite(m.theta)) throw InvalidArgument("ProbModel: theta not finite");
  auto unit_interval = [](double v) {
    return v >= -kEpsAlg && v <= 1.0 + kEpsAlg;
  };
  if (!unit_interval(m.q[0]) || !unit_interval(m.q[1]) ||
      std::fabs(m.q[0] + m.q[1] - 1.0) > kEpsAlg) {
    throw InvalidArgument("ProbModel: q is not a probability vector");
  }
  for (const auto& row : m.p) {
    if (!unit_interval(row[0]) || !unit_interval(row[1]) ||
        std::fabs(row[0] + row[1] - 1.0) > kEpsAlg) {
      throw InvalidArgument("ProbModel: P rows are not probability vectors");
    }
  }
  // With stochastic rows this is equivalent to stochastic columns.
  const double asym = m.p[0][0] * m.p[1][0] - m.p[0][1] * m.p[1][1];
  if (std::fabs(asym) > kEpsAlg) {
    throw ConstraintViolated("ProbModel: p11 p21 - p12 p22 = " +
                             std::to_string(asym));
  }
}

std::array<double, 2> transform_with_signs(const std::array<double, 2>& q,
                                           const RealMat2& p, double theta,
                                           int eps1, int eps2) {
  const double c = checked_cosh(theta);
  const double q1 = std::fmax(q[0], 0.0);
  const double q2 = std::fmax(q[1], 0.0);
  auto term = [&](int k, int eps) {
    const double a = q1 * std::fmax(p[0][k], 0.0);
    const double b = q2 * std::fmax(p[1][k], 0.0);
    return a + b + 2.0 * eps * std::sqrt(a * b) * c;
  };
  return {term(0, eps1), term(1, eps2)};
}

TransformedProbabilities transform_probabilities(const ProbModel& m) {
  validate(m);
  const auto v = transform_with_signs(m.q, m.p, m.theta, m.eps1, -m.eps1);
  TransformedProbabilities t;
  t.p1 = v[0];
  t.p2 = v[1];
  auto ok = [](double x) { return x >= -kEpsAlg && x <= 1.0 + kEpsAlg; };
  t.in_range = ok(t.p1) && ok(t.p2);
  return t;
}

ExtractedModel extract_model(const GVec2& beta, const GMat2& b) {
  const PolarG s1 = polar(beta.c1);
  const PolarG s2 = polar(beta.c2);
  std::array<std::array<PolarG, 2>, 2> t;
  for (int i = 0; i < 2; ++i)
    for (int k = 0; k < 2; ++k) t[i][k] = polar(b(i, k));

  ExtractedModel e;
  PhaseBookkeeping& ph = e.phases;
  ph.eta = s1.theta - s2.theta;
  ph.gamma1 = t[0][0].theta - t[1][0].theta;
  ph.gamma2 = t[0][1].theta - t[1][1].theta;
  ph.theta1 = ph.eta + ph.gamma1;
  ph.theta2 = ph.eta + ph.gamma2;
  ph.eps1 = s1.sign * s2.sign * t[0][0].sign * t[1][0].sign;
  ph.eps2 = s1.sign * s2.sign * t[0][1].sign * t[1][1].sign;

  ProbModel& m = e.model;
  m.q = {norm_sq(beta.c1), norm_sq(beta.c2)};
  m.p = prob_matrix(b);
  m.theta = ph.theta1;
  m.eps1 = ph.eps1;
  return e;
}

ConstraintReport check_sign_phase_constraints(const GMat2& b,
                                              const GVec2& beta, double tol) {
  ConstraintReport r;
  r.unitary = is_orthonormal_rows(b, tol);

  const std::array<GNum, 6> amps{beta.c1, beta.c2, b(0, 0),
                                 b(0, 1), b(1, 0), b(1, 1)};
  for (const GNum& z : amps) {
    if (!is_zero(z, tol) && !in_g_plus(z, tol)) {
      throw InvalidArgument(
          "check_sign_phase_constraints: amplitude outside G+");
    }
  }
  for (const GNum& z : amps) {
    if (is_zero(z, tol)) {
      r.vacuous = true;
      return r;
    }
  }

  const ExtractedModel e = extract_model(beta, b);
  const PhaseBookkeeping& ph = e.phases;
  const RealMat2& p = e.model.p;
  r.theta1 = ph.theta1;
  r.theta2 = ph.theta2;
  r.theta_difference = ph.theta1 - ph.theta2;
  r.eps1 = ph.eps1;
  r.eps2 = ph.eps2;
  r.opposite_signs = ph.eps1 == -ph.eps2;
  r.normalization_residual =
      std::fabs(ph.eps1 * std::sqrt(std::fmax(p[0][0] * p[1][0], 0.0)) *
                    checked_cosh(ph.theta1) +
                ph.eps2 * std::sqrt(std::fmax(p[0][1] * p[1][1], 0.0)) *
                    checked_cosh(ph.theta2));
  r.satisfied = r.opposite_signs && std::fabs(r.theta_difference) <= tol &&
                r.normalization_residual <= tol;
  return r;
}

StateDecomposition pipeline_probabilities(const GVec2& beta, const GMat2& b,
                                          double tol) {
  const double total = norm_sq(beta);
  if (!(std::fabs(total - 1.0) <= tol)) {
    throw NotNormalized("pipeline_probabilities: beta has squared norm " +
                        std::to_string(total));
  }
  return decompose(change_basis(beta, b), tol);
}

}  // namespace splitq
