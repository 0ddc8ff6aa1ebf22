#include "splitq/witness.hpp"

#include <algorithm>
#include <cmath>
#include <array>
#include <limits>

#include "splitq/born.hpp"
#include "splitq/errors.hpp"
#include "splitq/rng.hpp"

namespace splitq {

namespace {

constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();
constexpr std::uint64_t kBlock = 4096;

bool is_witness_index(std::uint64_t seed, std::uint64_t i,
                      const SearchRanges& ranges) {
  return violating_index(sample_instance(seed, i, ranges).alpha).has_value();
}

bool row_decomposable(const GVec2& row) {
  return std::fabs(norm_sq(row) - 1.0) <= kEpsAlg &&
         in_g_plus(row.c1, kEpsMem) && in_g_plus(row.c2, kEpsMem);
}

}  // namespace

GMat2 make_decomposable_unitary(const DecomposableUnitarySpec& spec) {
  if (!(spec.p > 0.0 && spec.p < 1.0)) {
    throw InvalidArgument("make_decomposable_unitary: p must lie in (0, 1)");
  }
  const double a = std::sqrt(spec.p);
  const double c = std::sqrt(1.0 - spec.p);
  GMat2 m;
  m(0, 0) = expj(spec.gamma1) * a;
  m(0, 1) = expj(spec.gamma2) * c;
  m(1, 0) = expj(spec.gamma1 - spec.delta) * c;
  m(1, 1) = expj(spec.gamma2 - spec.delta) * (-a);
  return m;
}

Instance make_instance(double q1, double xi1, double xi2,
                       const DecomposableUnitarySpec& spec) {
  Instance inst;
  inst.beta = {amplitude(1, q1, xi1), amplitude(1, 1.0 - q1, xi2)};
  inst.b = make_decomposable_unitary(spec);
  inst.alpha = apply_rows(inst.beta, inst.b);
  return inst;
}

Instance sample_instance(std::uint64_t seed, std::uint64_t index,
                         const SearchRanges& ranges) {
  SplitMix64 rng = SplitMix64::stream(seed, index);
  const double lo = ranges.phase_min;
  const double hi = ranges.phase_max;
  const double q1 = rng.open01();
  const double xi1 = rng.uniform(lo, hi);
  const double xi2 = rng.uniform(lo, hi);
  DecomposableUnitarySpec spec;
  spec.p = rng.open01();
  spec.gamma1 = rng.uniform(lo, hi);
  spec.gamma2 = rng.uniform(lo, hi);
  spec.delta = rng.uniform(lo, hi);
  return make_instance(q1, xi1, xi2, spec);
}

std::optional<int> violating_index(const GVec2& alpha) {
  const double n1 = norm_sq(alpha.c1);
  const double n2 = norm_sq(alpha.c2);
  if (n1 < -kEpsMem && n1 <= n2) return 1;
  if (n2 < -kEpsMem) return 2;
  return std::nullopt;
}

std::optional<NonTransitivityWitness> to_witness(const Instance& inst,
                                                 std::uint64_t iteration) {
  const auto idx = violating_index(inst.alpha);
  if (!idx) return std::nullopt;
  NonTransitivityWitness w;
  w.beta = inst.beta;
  w.b = inst.b;
  w.alpha = inst.alpha;
  w.violating_index = *idx;
  w.norm_sq = norm_sq(inst.alpha[*idx - 1]);
  w.iteration = iteration;
  return w;
}

std::optional<NonTransitivityWitness> search_non_transitivity_serial(
    std::uint64_t seed, std::uint64_t max_iter, const SearchRanges& ranges) {
  if (max_iter == 0) throw InvalidArgument("search: max_iter must be >= 1");
  for (std::uint64_t i = 0; i < max_iter; ++i) {
    if (auto w = to_witness(sample_instance(seed, i, ranges), i)) return w;
  }
  return std::nullopt;
}

std::optional<NonTransitivityWitness> search_non_transitivity(
    std::uint64_t seed, std::uint64_t max_iter, const SearchRanges& ranges) {
  if (max_iter == 0) throw InvalidArgument("search: max_iter must be >= 1");
  for (std::uint64_t start = 0; start < max_iter; start += kBlock) {
    const std::uint64_t end = std::min(max_iter, start + kBlock);
    std::uint64_t best = kNone;
#pragma omp parallel for reduction(min : best) schedule(static)
    for (std::uint64_t i = start; i < end; ++i) {
      if (i < best && is_witness_index(seed, i, ranges)) best = i;
    }
    if (best != kNone) return to_witness(sample_instance(seed, best, ranges), best);
  }
  return std::nullopt;
}

std::uint64_t count_witnesses_serial(std::uint64_t seed, std::uint64_t n,
                                     const SearchRanges& ranges) {
  std::uint64_t count = 0;
  for (std::uint64_t i = 0; i < n; ++i) count += is_witness_index(seed, i, ranges);
  return count;
}

std::uint64_t count_witnesses(std::uint64_t seed, std::uint64_t n,
                              const SearchRanges& ranges) {
  std::uint64_t count = 0;
#pragma omp parallel for reduction(+ : count) schedule(static)
  for (std::uint64_t i = 0; i < n; ++i) count += is_witness_index(seed, i, ranges);
  return count;
}

bool verify_witness(const NonTransitivityWitness& w) {
  if (w.violating_index != 1 && w.violating_index != 2) return false;
  const std::array<GNum, 8> all{w.beta.c1, w.beta.c2, w.b(0, 0), w.b(0, 1),
                                 w.b(1, 0), w.b(1, 1), w.alpha.c1, w.alpha.c2};
  for (const GNum& z : all)
    if (!is_finite(z)) return false;

  if (!row_decomposable(w.beta)) return false;
  if (!row_decomposable(w.b.row(0)) || !row_decomposable(w.b.row(1))) return false;
  if (!is_orthonormal_rows(w.b, kEpsAlg)) return false;

  const GVec2 expect = apply_rows(w.beta, w.b);
  if (distance(expect.c1, w.alpha.c1) > kEpsAlg ||
      distance(expect.c2, w.alpha.c2) > kEpsAlg) {
    return false;
  }
  return norm_sq(w.alpha[w.violating_index - 1]) < -kEpsMem;
}

}  // namespace splitq
