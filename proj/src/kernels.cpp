#include "splitq/kernels.hpp"

#include <cmath>
#include <cstdint>
#include <limits>

#include "splitq/errors.hpp"
#include "splitq/gnum.hpp"

namespace splitq {

namespace {

SweepRow eval_row(Law law, double p1, double p2, int sign, double theta) {
  SweepRow r;
  r.theta = theta;
  r.p_prime = law == Law::kTrig ? trig_law(p1, p2, theta)
                                : hyp_law(p1, p2, theta, sign);
  if (p1 > 0.0 && p2 > 0.0) {
    try {
      r.regime = classify(r.p_prime, p1, p2).regime;
    } catch (const DegenerateInputs&) {
      r.regime = Regime::kBoundary;
    }
  }
  return r;
}

void check_sweep_args(Law law, int sign, std::span<const double> grid) {
  if (law == Law::kHyp) {
    if (sign != 1 && sign != -1) throw InvalidArgument("sweep: sign must be +-1");
    for (double t : grid) {
      if (!std::isfinite(t) || std::fabs(t) > kThetaMax) {
        throw RangeError("sweep: theta outside [-theta_max, theta_max]");
      }
    }
  }
}

}  // namespace

std::vector<double> uniform_grid(double theta_min, double theta_max,
                                 std::size_t steps) {
  if (steps < 2) throw InvalidArgument("grid: steps must be >= 2");
  if (!std::isfinite(theta_min) || !std::isfinite(theta_max) ||
      !(theta_min < theta_max)) {
    throw InvalidArgument("grid: require finite theta_min < theta_max");
  }
  std::vector<double> g(steps);
  const double h = (theta_max - theta_min) / static_cast<double>(steps - 1);
  for (std::size_t k = 0; k + 1 < steps; ++k)
    g[k] = theta_min + h * static_cast<double>(k);
  g.back() = theta_max;
  for (std::size_t k = 1; k < steps; ++k)
    if (!(g[k] > g[k - 1])) throw InvalidArgument("grid: too many steps for range");
  return g;
}

std::vector<SweepRow> sweep_serial(Law law, double p1, double p2, int sign,
                                   std::span<const double> grid) {
  check_sweep_args(law, sign, grid);
  std::vector<SweepRow> out(grid.size());
  for (std::size_t k = 0; k < grid.size(); ++k)
    out[k] = eval_row(law, p1, p2, sign, grid[k]);
  return out;
}

std::vector<SweepRow> sweep(Law law, double p1, double p2, int sign,
                            std::span<const double> grid) {
  check_sweep_args(law, sign, grid);
  std::vector<SweepRow> out(grid.size());
  const auto n = static_cast<std::int64_t>(grid.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t k = 0; k < n; ++k)
    out[k] = eval_row(law, p1, p2, sign, grid[k]);
  return out;
}

std::vector<InterferenceVerdict> classify_batch_serial(
    std::span<const Triple> in) {
  std::vector<InterferenceVerdict> out;
  out.reserve(in.size());
  for (const Triple& t : in) out.push_back(classify(t.p_prime, t.p1, t.p2));
  return out;
}

std::vector<InterferenceVerdict> classify_batch(std::span<const Triple> in) {
  std::vector<InterferenceVerdict> out(in.size());
  const auto n = static_cast<std::int64_t>(in.size());
  std::int64_t first_bad = std::numeric_limits<std::int64_t>::max();
#pragma omp parallel for schedule(static) reduction(min : first_bad)
  for (std::int64_t k = 0; k < n; ++k) {
    try {
      out[k] = classify(in[k].p_prime, in[k].p1, in[k].p2);
    } catch (const DegenerateInputs&) {
      if (k < first_bad) first_bad = k;
    }
  }
  if (first_bad != std::numeric_limits<std::int64_t>::max()) {
    // Rethrow the serial error for the first offending element.
    const Triple& t = in[first_bad];
    classify(t.p_prime, t.p1, t.p2);
  }
  return out;
}

}  // namespace splitq
