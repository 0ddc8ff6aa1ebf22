#include <doctest.h>

#include <cmath>
#include <random>

#include "splitq/errors.hpp"
#include "splitq/gspace.hpp"
#include "splitq/witness.hpp"

using namespace splitq;

namespace {

bool near(const GNum& a, const GNum& b, double tol) {
  return std::fabs(a.x - b.x) <= tol && std::fabs(a.y - b.y) <= tol;
}

GNum rnd(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> d(-3, 3);
  return {d(rng), d(rng)};
}

GVec2 rvec(std::mt19937_64& rng) { return {rnd(rng), rnd(rng)}; }

GMat2 hyperbolic_rotation(double t) {
  GMat2 m;
  m(0, 0) = {std::cosh(t), 0};
  m(0, 1) = {0, std::sinh(t)};
  m(1, 0) = {0, std::sinh(t)};
  m(1, 1) = {std::cosh(t), 0};
  return m;
}

}  // namespace

TEST_CASE("inner product values") {
  const GVec2 e1{{1, 0}, {0, 0}};
  CHECK(inner(e1, e1) == GNum{1, 0});
  // j conj(j) = -j^2 = -1: the form is indefinite.
  const GVec2 je1{{0, 1}, {0, 0}};
  CHECK(inner(je1, je1) == GNum{-1, 0});
}

TEST_CASE("inner product axioms") {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 1000; ++i) {
    const GVec2 u = rvec(rng), w = rvec(rng), v = rvec(rng);
    const GNum a = rnd(rng), b = rnd(rng);
    CHECK(near(inner(a * u + b * w, v), a * inner(u, v) + b * inner(w, v), 1e-11));
    CHECK(near(inner(u, v), conj(inner(v, u)), 1e-12));
    CHECK(inner(u, u).y == 0.0);
  }
}

TEST_CASE("nondegeneracy on the real-coordinate probes") {
  // (z, e) for e in {(1,0),(j,0),(0,1),(0,j)} recovers all four real
  // coordinates of z up to sign, so all vanish only for z = 0.
  const GVec2 probes[] = {{{1, 0}, {0, 0}}, {{0, 1}, {0, 0}},
                          {{0, 0}, {1, 0}}, {{0, 0}, {0, 1}}};
  std::mt19937_64 rng(22);
  for (int i = 0; i < 200; ++i) {
    const GVec2 z = i == 0 ? GVec2{} : rvec(rng);
    bool all_zero = true;
    for (const auto& e : probes) all_zero &= inner(z, e) == GNum{0, 0};
    CHECK(all_zero == (z == GVec2{}));
  }
}

TEST_CASE("is_orthonormal_rows") {
  CHECK(is_orthonormal_rows(GMat2::identity()));
  CHECK(is_orthonormal_rows(hyperbolic_rotation(0.7), 1e-12));
  CHECK(is_orthonormal_cols(hyperbolic_rotation(0.7), 1e-12));
  GMat2 rep;
  rep(0, 0) = {1, 0};
  rep(1, 0) = {1, 0};
  CHECK_FALSE(is_orthonormal_rows(rep));
}

TEST_CASE("change_basis") {
  const GVec2 e1{{1, 0}, {0, 0}};
  CHECK(change_basis(e1, GMat2::identity()) == e1);

  const GMat2 b = make_decomposable_unitary({0.3, 0.4, -1.1, 0.25});
  const GVec2 a = change_basis(e1, b);
  CHECK(a == b.row(0));

  GMat2 rep;
  rep(0, 0) = {1, 0};
  rep(1, 0) = {1, 0};
  CHECK_THROWS_AS(change_basis(e1, rep), NotUnitary);
}

TEST_CASE("norm preservation and column orthonormality") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> ph(-2, 2), pr(0.01, 0.99);
  for (int i = 0; i < 1000; ++i) {
    const GMat2 b = make_decomposable_unitary({pr(rng), ph(rng), ph(rng), ph(rng)});
    REQUIRE(is_orthonormal_rows(b));
    CHECK(is_orthonormal_cols(b));
    const GVec2 beta = rvec(rng);
    const GVec2 alpha = change_basis(beta, b);
    const double scale = 1 + std::fabs(beta.c1.x) + std::fabs(beta.c1.y) +
                         std::fabs(beta.c2.x) + std::fabs(beta.c2.y);
    CHECK(std::fabs(norm_sq(alpha) - norm_sq(beta)) <= kEpsAlg * scale * scale);
  }
}

TEST_CASE("prob_matrix") {
  const RealMat2 id = prob_matrix(GMat2::identity());
  CHECK(id == RealMat2{{{1, 0}, {0, 1}}});

  const RealMat2 half = prob_matrix(make_decomposable_unitary({0.5, 0.9, -0.4, 1.3}));
  for (const auto& r : half)
    for (double v : r) CHECK(v == doctest::Approx(0.5).epsilon(1e-12));

  // Hyperbolic rotation is unitary but its j entries lie outside G+.
  const GMat2 rot = hyperbolic_rotation(std::asinh(1.0));
  CHECK(is_orthonormal_rows(rot));
  CHECK_FALSE(entries_in_g_plus(rot));
  const RealMat2 p = prob_matrix(rot);
  CHECK(stochastic_residual(p) <= 1e-12);
  CHECK_FALSE(is_doubly_stochastic(p));
}

TEST_CASE("decomposable unitaries give doubly stochastic matrices") {
  std::mt19937_64 rng(24);
  std::uniform_real_distribution<double> ph(-3, 3), pr(1e-3, 1 - 1e-3);
  for (int i = 0; i < 1000; ++i) {
    const GMat2 b = make_decomposable_unitary({pr(rng), ph(rng), ph(rng), ph(rng)});
    REQUIRE(entries_in_g_plus(b));
    REQUIRE(is_orthonormal_rows(b));
    CHECK(is_doubly_stochastic(prob_matrix(b)));
  }
}
