#pragma once

// The two-dimensional hyperbolic Hilbert module E = G^2 with the G-valued
// product (u, v) = u1 conj(v1) + u2 conj(v2). Viewed as a real bilinear
// form the product has signature (+, -, +, -).

#include <array>

#include "splitq/gnum.hpp"

namespace splitq {

struct GVec2 {
  GNum c1;
  GNum c2;

  constexpr const GNum& operator[](int i) const { return i == 0 ? c1 : c2; }
  constexpr GNum& operator[](int i) { return i == 0 ? c1 : c2; }

  friend constexpr bool operator==(const GVec2&, const GVec2&) = default;
};

constexpr GVec2 operator+(const GVec2& a, const GVec2& b) {
  return {a.c1 + b.c1, a.c2 + b.c2};
}
constexpr GVec2 operator*(const GNum& s, const GVec2& v) {
  return {s * v.c1, s * v.c2};
}

// Row-major 2x2 matrix over G. Row i holds the coordinates of the i-th
// vector of the new basis in the old one.
struct GMat2 {
  std::array<std::array<GNum, 2>, 2> rows{};

  constexpr GVec2 row(int i) const { return {rows[i][0], rows[i][1]}; }
  constexpr GVec2 col(int k) const { return {rows[0][k], rows[1][k]}; }
  constexpr const GNum& operator()(int i, int k) const { return rows[i][k]; }
  constexpr GNum& operator()(int i, int k) { return rows[i][k]; }

  static constexpr GMat2 identity() {
    GMat2 m;
    m.rows[0][0] = {1, 0};
    m.rows[1][1] = {1, 0};
    return m;
  }

  friend constexpr bool operator==(const GMat2&, const GMat2&) = default;
};

using RealMat2 = std::array<std::array<double, 2>, 2>;

// Linear in the first argument, conjugate-linear in the second.
constexpr GNum inner(const GVec2& u, const GVec2& v) {
  return u.c1 * conj(v.c1) + u.c2 * conj(v.c2);
}

// Real part of inner(v, v); the j-part vanishes identically.
constexpr double norm_sq(const GVec2& v) {
  return norm_sq(v.c1) + norm_sq(v.c2);
}

// Worst deviation of the row Gram matrix from the identity, measured with
// the componentwise max-abs metric.
double orthonormality_residual(const GMat2& b);

// Rows orthonormal under inner(): (r1,r1) = (r2,r2) = 1 and (r1,r2) = 0,
// each within tol.
bool is_orthonormal_rows(const GMat2& b, double tol = kEpsAlg);

// Same check applied to columns. Implied by row orthonormality in dimension
// two; kept as a separate predicate so tests can assert the implication.
bool is_orthonormal_cols(const GMat2& b, double tol = kEpsAlg);

// Coordinates (alpha1, alpha2) of a vector in the old basis, given its
// coordinates beta in the basis whose rows make up b:
//   alpha_k = beta_1 b_1k + beta_2 b_2k.
// Throws NotUnitary unless is_orthonormal_rows(b, kEpsAlg).
GVec2 change_basis(const GVec2& beta, const GMat2& b);

// Same product without the unitarity check.
constexpr GVec2 apply_rows(const GVec2& beta, const GMat2& b) {
  return {beta.c1 * b(0, 0) + beta.c2 * b(1, 0),
          beta.c1 * b(0, 1) + beta.c2 * b(1, 1)};
}

// Entrywise squared norm.
RealMat2 prob_matrix(const GMat2& b);

bool entries_in_g_plus(const GMat2& b, double tol = kEpsMem);

// max over rows and columns of |sum - 1|.
double stochastic_residual(const RealMat2& p);

// Rows and columns sum to 1 within tol and no entry is below -tol.
bool is_doubly_stochastic(const RealMat2& p, double tol = kEpsAlg);

}  // namespace splitq
