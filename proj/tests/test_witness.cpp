#include <doctest.h>

#include <cmath>
#include <random>

#include "splitq/born.hpp"
#include "splitq/errors.hpp"
#include "splitq/rng.hpp"
#include "splitq/witness.hpp"

using namespace splitq;

namespace {

const double kH = std::sqrt(0.5);
const double kLn2 = std::log(2.0);

bool near(const GNum& a, const GNum& b, double tol) {
  return std::fabs(a.x - b.x) <= tol && std::fabs(a.y - b.y) <= tol;
}

}  // namespace

TEST_CASE("SplitMix64 reference outputs") {
  // First outputs for state 0, from the published reference implementation.
  SplitMix64 g(0);
  CHECK(g.next() == 0xE220A8397B1DCDAFULL);
  CHECK(g.next() == 0x6E789E6AA1B965F4ULL);
  CHECK(g.next() == 0x06C45D188009454FULL);

  SplitMix64 u(123);
  for (int i = 0; i < 10000; ++i) {
    const double x = u.open01();
    CHECK(x > 0.0);
    CHECK(x < 1.0);
  }
}

TEST_CASE("make_decomposable_unitary") {
  SUBCASE("Hadamard-like at p = 1/2 with zero phases") {
    const GMat2 b = make_decomposable_unitary({0.5, 0, 0, 0});
    CHECK(near(b(0, 0), {kH, 0}, 1e-16));
    CHECK(near(b(0, 1), {kH, 0}, 1e-16));
    CHECK(near(b(1, 0), {kH, 0}, 1e-16));
    CHECK(near(b(1, 1), {-kH, 0}, 1e-16));
    CHECK(is_orthonormal_rows(b, 1e-15));
  }
  SUBCASE("hyperbolic phase on the first column") {
    const GMat2 b = make_decomposable_unitary({0.5, kLn2, 0, 0});
    CHECK(is_orthonormal_rows(b, 1e-9));
    CHECK(entries_in_g_plus(b));
  }
  SUBCASE("p near 1 is near-identity up to phases") {
    const RealMat2 p = prob_matrix(make_decomposable_unitary({0.999, 0.3, -0.2, 0.1}));
    CHECK(p[0][0] == doctest::Approx(0.999).epsilon(1e-12));
    CHECK(p[0][1] == doctest::Approx(0.001).epsilon(1e-9));
  }
  SUBCASE("invalid p") {
    CHECK_THROWS_AS(make_decomposable_unitary({0.0, 0, 0, 0}), InvalidArgument);
    CHECK_THROWS_AS(make_decomposable_unitary({1.0, 0, 0, 0}), InvalidArgument);
  }
  SUBCASE("random specs") {
    std::mt19937_64 rng(51);
    std::uniform_real_distribution<double> ph(-3, 3), pr(1e-6, 1 - 1e-6);
    for (int i = 0; i < 10000; ++i) {
      const double p = pr(rng);
      const GMat2 b = make_decomposable_unitary({p, ph(rng), ph(rng), ph(rng)});
      REQUIRE(is_orthonormal_rows(b, kEpsAlg));
      REQUIRE(entries_in_g_plus(b, kEpsMem));
      const RealMat2 pm = prob_matrix(b);
      CHECK(std::fabs(pm[0][0] - p) <= kEpsAlg);
      CHECK(std::fabs(pm[1][1] - p) <= kEpsAlg);
      CHECK(std::fabs(pm[0][1] - (1 - p)) <= kEpsAlg);
      CHECK(std::fabs(pm[1][0] - (1 - p)) <= kEpsAlg);
    }
  }
}

TEST_CASE("analytic witness") {
  // alpha_2 = 1/2 e^{j ln2} - 1/2, |alpha_2|^2 = 1/2 - 1/2 cosh(ln 2).
  const Instance inst = make_instance(0.5, kLn2, 0, {0.5, 0, 0, 0});
  CHECK(near(inst.alpha.c2, {0.125, 0.375}, 1e-15));
  CHECK(std::fabs(norm_sq(inst.alpha.c2) + 0.125) <= 1e-12);

  const auto w = to_witness(inst);
  REQUIRE(w);
  CHECK(w->violating_index == 2);
  CHECK(verify_witness(*w));

  CHECK(decompose(inst.beta).decomposable);
  CHECK(decompose(inst.b.row(0)).decomposable);
  CHECK(decompose(inst.b.row(1)).decomposable);
  CHECK_FALSE(decompose(inst.alpha).decomposable);
}

TEST_CASE("real coefficients never give a witness") {
  std::mt19937_64 rng(52);
  std::uniform_real_distribution<double> u(0.001, 0.999);
  for (int i = 0; i < 2000; ++i) {
    const Instance inst = make_instance(u(rng), 0, 0, {u(rng), 0, 0, 0});
    CHECK_FALSE(to_witness(inst));
  }
  SearchRanges zero{0.0, 0.0};
  CHECK_FALSE(search_non_transitivity(5, 5000, zero));
}

TEST_CASE("verify_witness rejects tampered witnesses") {
  const Instance inst = make_instance(0.5, kLn2, 0, {0.5, 0, 0, 0});
  const NonTransitivityWitness good = *to_witness(inst);

  // Zero xi1 and recompute alpha: the negative norm disappears.
  NonTransitivityWitness w = good;
  w.beta.c1 = amplitude(1, 0.5, 0.0);
  w.alpha = apply_rows(w.beta, w.b);
  CHECK_FALSE(verify_witness(w));

  w = good;
  w.violating_index = 1;
  CHECK_FALSE(verify_witness(w));

  w = good;
  w.alpha.c2.y += 1e-3;  // alpha no longer matches beta B
  CHECK_FALSE(verify_witness(w));

  w = good;
  w.beta.c1 = {0, 1};  // not normalized / not decomposable
  CHECK_FALSE(verify_witness(w));

  w = good;
  w.violating_index = 3;
  CHECK_FALSE(verify_witness(w));
}

TEST_CASE("search is deterministic and matches the serial reference") {
  for (std::uint64_t seed : {1ULL, 2ULL, 99ULL, 0xDEADBEEFULL}) {
    const auto a = search_non_transitivity(seed, 10000);
    const auto b = search_non_transitivity(seed, 10000);
    const auto s = search_non_transitivity_serial(seed, 10000);
    REQUIRE(a);
    REQUIRE(b);
    REQUIRE(s);
    CHECK(a->iteration == b->iteration);
    CHECK(a->iteration == s->iteration);
    CHECK(a->beta == s->beta);
    CHECK(a->b == s->b);
    CHECK(a->alpha == s->alpha);
    CHECK(verify_witness(*a));
    // Everything before the reported index is not a witness.
    for (std::uint64_t i = 0; i < a->iteration; ++i)
      CHECK_FALSE(to_witness(sample_instance(seed, i)));
  }
  CHECK_THROWS_AS(search_non_transitivity(1, 0), InvalidArgument);
  CHECK_THROWS_AS(search_non_transitivity_serial(1, 0), InvalidArgument);
}

TEST_CASE("witness frequency regression") {
  const std::uint64_t n = 10000;
  const std::uint64_t count = count_witnesses(1, n);
  CHECK(count == count_witnesses_serial(1, n));
  // Frequency with default ranges, seed 1, first 10^4 indices.
  CHECK(count == 7596);
  CHECK(double(count) / n >= 0.10);
}
