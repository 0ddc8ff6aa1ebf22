#pragma once

// Constructive side of decomposability: a family of G-unitaries whose
// entries all lie in G+, and a seeded search for states that are
// decomposable in basis b, with b decomposable in basis a, yet fail to be
// decomposable in basis a.

#include <cstdint>
#include <optional>

#include "splitq/gnum.hpp"
#include "splitq/gspace.hpp"

namespace splitq {

// Rows [ sqrt(p) e^{j g1},         sqrt(1-p) e^{j g2}       ]
//      [ sqrt(1-p) e^{j(g1-delta)}, -sqrt(p) e^{j(g2-delta)} ].
// Row norms are p + (1-p) = 1 and the cross term cancels for every
// (g1, g2, delta), so the matrix is G-unitary with all entries in G+.
struct DecomposableUnitarySpec {
  double p = 0.5;  // in (0, 1)
  double gamma1 = 0.0;
  double gamma2 = 0.0;
  double delta = 0.0;
};

// Throws InvalidArgument unless 0 < p < 1; RangeError from expj.
GMat2 make_decomposable_unitary(const DecomposableUnitarySpec& spec);

struct SearchRanges {
  double phase_min = -3.0;
  double phase_max = 3.0;
};

// One sampled (beta, B) pair together with the resulting a-coordinates.
struct Instance {
  GVec2 beta;
  GMat2 b;
  GVec2 alpha;
};

// beta = (sqrt(q1) e^{j xi1}, sqrt(1-q1) e^{j xi2}), B from spec,
// alpha = change_basis(beta, B).
Instance make_instance(double q1, double xi1, double xi2,
                       const DecomposableUnitarySpec& spec);

// Draws, in order from SplitMix64::stream(seed, index): q1 ~ (0,1),
// xi1, xi2 ~ [phase_min, phase_max), p ~ (0,1), gamma1, gamma2, delta ~
// [phase_min, phase_max).
Instance sample_instance(std::uint64_t seed, std::uint64_t index,
                         const SearchRanges& ranges = {});

struct NonTransitivityWitness {
  GVec2 beta;
  GMat2 b;
  GVec2 alpha;
  int violating_index = 1;  // 1 or 2
  double norm_sq = 0.0;     // |alpha_{violating_index}|^2 < -kEpsMem
  std::uint64_t iteration = 0;
};

// The coordinate of alpha with |alpha_i|^2 < -kEpsMem, as 1 or 2.
std::optional<int> violating_index(const GVec2& alpha);

std::optional<NonTransitivityWitness> to_witness(const Instance& inst,
                                                 std::uint64_t iteration = 0);

// Returns the witness at the lowest iteration index in [0, max_iter), or
// nothing. Runs the index range in parallel blocks; the result is the same
// as the serial search for every thread count.
// Throws InvalidArgument for max_iter == 0.
std::optional<NonTransitivityWitness> search_non_transitivity(
    std::uint64_t seed, std::uint64_t max_iter,
    const SearchRanges& ranges = {});

// Single-threaded reference for search_non_transitivity.
std::optional<NonTransitivityWitness> search_non_transitivity_serial(
    std::uint64_t seed, std::uint64_t max_iter,
    const SearchRanges& ranges = {});

// Number of witnesses among the first n indices.
std::uint64_t count_witnesses(std::uint64_t seed, std::uint64_t n,
                              const SearchRanges& ranges = {});
std::uint64_t count_witnesses_serial(std::uint64_t seed, std::uint64_t n,
                                     const SearchRanges& ranges = {});

// Re-derives every witness condition from the raw fields: beta normalized
// and decomposable, both rows of B normalized and decomposable, B unitary,
// alpha equal to change_basis(beta, B) within kEpsAlg, and
// |alpha_{violating_index}|^2 < -kEpsMem. Never throws.
bool verify_witness(const NonTransitivityWitness& w);

}  // namespace splitq
