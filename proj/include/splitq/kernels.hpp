#pragma once

// Batch kernels over interference laws. Each kernel has an OpenMP version
// and a serial reference with identical per-element arithmetic, so the two
// agree bit for bit.

#include <cstddef>
#include <span>
#include <vector>

#include "splitq/interference.hpp"

namespace splitq {

enum class Law { kTrig, kHyp };

struct SweepRow {
  double theta = 0.0;
  double p_prime = 0.0;
  Regime regime = Regime::kBoundary;  // classify(p_prime, p1, p2)
};

// steps points from theta_min to theta_max inclusive, uniformly spaced.
// Throws InvalidArgument unless steps >= 2, theta_min < theta_max and the
// resulting grid is strictly increasing.
std::vector<double> uniform_grid(double theta_min, double theta_max,
                                 std::size_t steps);

// Evaluates the law at every grid point. Throws RangeError (hyperbolic law,
// |theta| > kThetaMax) before any output is produced.
std::vector<SweepRow> sweep(Law law, double p1, double p2, int sign,
                            std::span<const double> grid);
std::vector<SweepRow> sweep_serial(Law law, double p1, double p2, int sign,
                                   std::span<const double> grid);

struct Triple {
  double p_prime;
  double p1;
  double p2;
};

// classify() over a batch. Throws DegenerateInputs for the first offending
// triple in index order.
std::vector<InterferenceVerdict> classify_batch(std::span<const Triple> in);
std::vector<InterferenceVerdict> classify_batch_serial(
    std::span<const Triple> in);

}  // namespace splitq
