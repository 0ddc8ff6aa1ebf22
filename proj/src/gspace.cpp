#include "splitq/gspace.hpp"

#include <algorithm>
#include <cmath>

#include "splitq/errors.hpp"

namespace splitq {

namespace {

double gram_residual(const GVec2& a, const GVec2& b) {
  constexpr GNum kOne{1, 0};
  constexpr GNum kZero{0, 0};
  return std::max({distance(inner(a, a), kOne), distance(inner(b, b), kOne),
                   distance(inner(a, b), kZero)});
}

}  // namespace

double orthonormality_residual(const GMat2& b) {
  return gram_residual(b.row(0), b.row(1));
}

bool is_orthonormal_rows(const GMat2& b, double tol) {
  return orthonormality_residual(b) <= tol;
}

bool is_orthonormal_cols(const GMat2& b, double tol) {
  return gram_residual(b.col(0), b.col(1)) <= tol;
}

GVec2 change_basis(const GVec2& beta, const GMat2& b) {
  const double r = orthonormality_residual(b);
  if (!(r <= kEpsAlg)) {
    throw NotUnitary("change_basis: rows are not orthonormal (residual " +
                     std::to_string(r) + ")");
  }
  return apply_rows(beta, b);
}

RealMat2 prob_matrix(const GMat2& b) {
  RealMat2 p{};
  for (int i = 0; i < 2; ++i)
    for (int k = 0; k < 2; ++k) p[i][k] = norm_sq(b(i, k));
  return p;
}

bool entries_in_g_plus(const GMat2& b, double tol) {
  for (const auto& r : b.rows)
    for (const auto& z : r)
      if (!in_g_plus(z, tol)) return false;
  return true;
}

double stochastic_residual(const RealMat2& p) {
  double r = 0.0;
  for (int i = 0; i < 2; ++i) {
    r = std::max(r, std::fabs(p[i][0] + p[i][1] - 1.0));
    r = std::max(r, std::fabs(p[0][i] + p[1][i] - 1.0));
  }
  return r;
}

bool is_doubly_stochastic(const RealMat2& p, double tol) {
  for (const auto& r : p)
    for (double v : r)
      if (v < -tol) return false;
  return stochastic_residual(p) <= tol;
}

}  // namespace splitq
