#pragma once

// Generalized Born rule on the two-dimensional hyperbolic module.
//
// A normalized state phi = beta_1 |b_1> + beta_2 |b_2> is decomposable with
// respect to {|b_i>} when both beta_i lie in G+; only then are the numbers
// q_i = |beta_i|^2 read as probabilities. Writing every amplitude in polar
// form, beta_i = s_i sqrt(q_i) e^{j xi_i} and b_ik = t_ik sqrt(p_ik)
// e^{j gamma_ik}, the a-basis probabilities become
//
//   p_1 = q_1 p_11 + q_2 p_21 + 2 eps_1 sqrt(q_1 p_11 q_2 p_21) cosh theta_1
//   p_2 = q_1 p_12 + q_2 p_22 + 2 eps_2 sqrt(q_1 p_12 q_2 p_22) cosh theta_2
//
// with theta_i = eta + gamma_i, eta = xi_1 - xi_2, gamma_1 = gamma_11 -
// gamma_21, gamma_2 = gamma_12 - gamma_22 and eps_i = s_1 s_2 t_1i t_2i.
// Normalization of the result forces eps_2 = -eps_1; unitarity of the
// change of basis forces theta_1 = theta_2.

#include <array>
#include <optional>

#include "splitq/gnum.hpp"
#include "splitq/gspace.hpp"

namespace splitq {

struct CoefficientPhase {
  int sign = 1;
  double xi = 0.0;
};

struct StateDecomposition {
  GVec2 coefficients;
  bool decomposable = false;
  // Present iff decomposable.
  std::optional<std::array<double, 2>> probabilities;
  // Present for coefficients with |beta_i|^2 > kEpsMem.
  std::array<std::optional<CoefficientPhase>, 2> phases;
};

struct ProbModel {
  std::array<double, 2> q{1.0, 0.0};
  RealMat2 p{{{1.0, 0.0}, {0.0, 1.0}}};
  double theta = 0.0;
  int eps1 = 1;  // sign on the p_1 interference term; p_2 gets -eps1
};

// Phase bookkeeping recovered from the amplitudes of a (beta, B) pair.
struct PhaseBookkeeping {
  double eta = 0.0;
  double gamma1 = 0.0;
  double gamma2 = 0.0;
  double theta1 = 0.0;
  double theta2 = 0.0;
  int eps1 = 1;
  int eps2 = -1;
};

struct ExtractedModel {
  ProbModel model;  // theta = theta1
  PhaseBookkeeping phases;
};

struct TransformedProbabilities {
  double p1 = 0.0;
  double p2 = 0.0;
  // False when either value leaves [-kEpsAlg, 1 + kEpsAlg]: the outcome is
  // not decomposable and the values are not probabilities.
  bool in_range = true;
};

struct ConstraintReport {
  // Some amplitude is zero, so no phase relation is required.
  bool vacuous = false;
  bool unitary = false;
  double theta1 = 0.0;
  double theta2 = 0.0;
  double theta_difference = 0.0;  // theta1 - theta2
  // |eps1 sqrt(p11 p21) cosh theta1 + eps2 sqrt(p12 p22) cosh theta2|
  double normalization_residual = 0.0;
  int eps1 = 1;
  int eps2 = -1;
  bool opposite_signs = true;
  bool satisfied = true;
};

// Throws NotNormalized if |beta_1|^2 + |beta_2|^2 differs from 1 by more
// than tol. The same tol is used for G+ membership.
StateDecomposition decompose(const GVec2& phi, double tol = kEpsAlg);

// sign * sqrt(q) * e^{j xi}. Throws InvalidArgument for q < 0 or a sign
// other than +-1, RangeError from expj.
GNum amplitude(int sign, double q, double xi);

// Throws InvalidArgument when q or the rows of P are not probability
// vectors (within kEpsAlg) or eps1 is not +-1, and ConstraintViolated when
// p11 p21 != p12 p22 (the interference terms would not cancel).
void validate(const ProbModel& m);

// Closed-form transformation with opposite signs. Validates the model.
TransformedProbabilities transform_probabilities(const ProbModel& m);

// Same law with both signs chosen freely and no validation beyond the
// phase range. Used to show that equal signs break normalization.
std::array<double, 2> transform_with_signs(const std::array<double, 2>& q,
                                           const RealMat2& p, double theta,
                                           int eps1, int eps2);

// Polar decomposition of every amplitude of (beta, B). Throws DegenerateNorm
// if any of the six amplitudes has |z|^2 <= 0.
ExtractedModel extract_model(const GVec2& beta, const GMat2& b);

// Reports theta1, theta2 and the sign/normalization relations. Zero
// amplitudes (max-abs <= tol) make the report vacuous. Throws
// InvalidArgument when a nonzero amplitude is outside G+ and DegenerateNorm
// when one sits on the light cone.
ConstraintReport check_sign_phase_constraints(const GMat2& b,
                                              const GVec2& beta,
                                              double tol = kEpsAlg);

// decompose(change_basis(beta, B)). Throws NotNormalized for beta and
// NotUnitary for B.
StateDecomposition pipeline_probabilities(const GVec2& beta, const GMat2& b,
                                          double tol = kEpsAlg);

}  // namespace splitq
