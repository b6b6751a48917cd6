#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "robmon/templates.hpp"

namespace robmon {

struct BenchReport {
  TemplateKind kind = TemplateKind::E;
  std::size_t nesting = 1;
  std::size_t horizon = 0;
  std::size_t steps = 0;
  double mean_ms = 0.0;
  double variance_ms2 = 0.0;  // unbiased sample variance
};

inline constexpr std::size_t kMinBenchSteps = 30;
inline constexpr std::size_t kBenchWarmupSteps = 10;

/// Times `steps` monitor steps on a template formula over a random-walk
/// trace with a hold predictor. Only the step() call is timed, after
/// kBenchWarmupSteps untimed steps. Throws std::invalid_argument.
BenchReport run_bench(TemplateKind kind, std::size_t n, std::size_t horizon, std::size_t steps,
                      std::uint64_t seed = 1);

struct SweepResult {
  std::vector<BenchReport> points;
  double slope = 0.0;  // least-squares slope of log(mean) against log(H)
};

inline constexpr std::size_t kSweepHorizons[] = {500, 1000, 2000, 4000};

SweepResult run_sweep(TemplateKind kind, std::size_t n, std::span<const std::size_t> horizons,
                      std::size_t steps, std::uint64_t seed = 1);

/// Least-squares slope of log(y) on log(x). Needs two or more positive points.
double loglog_slope(std::span<const double> x, std::span<const double> y);

}  // namespace robmon
