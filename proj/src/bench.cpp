#include "robmon/bench.hpp"

#include <chrono>
#include <cmath>
#include <random>
#include <stdexcept>

#include "robmon/monitor.hpp"
#include "robmon/parser.hpp"

namespace robmon {

BenchReport run_bench(TemplateKind kind, std::size_t n, std::size_t horizon, std::size_t steps,
                      std::uint64_t seed) {
  if (steps < kMinBenchSteps) {
    throw std::invalid_argument("steps >= " + std::to_string(kMinBenchSteps) + " required");
  }
  auto tmpl = make_template(kind, n, horizon);
  Monitor monitor(parse_formula(tmpl.text), tmpl.predicates, tmpl.variables);

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> jitter(-0.5, 0.5);
  const std::size_t total = kBenchWarmupSteps + steps;
  std::vector<StateSample> walk(total);
  std::vector<double> x(tmpl.variables.size(), 0.0);
  for (std::size_t i = 0; i < total; ++i) {
    for (auto& v : x) v += jitter(rng);
    walk[i] = {static_cast<double>(i), x};
  }

  std::vector<StateSample> predictions(monitor.horizon());
  std::vector<double> samples_ms;
  samples_ms.reserve(steps);
  for (std::size_t i = 0; i < total; ++i) {
    for (auto& p : predictions) p = walk[i];
    auto start = std::chrono::steady_clock::now();
    monitor.step(walk[i], predictions);
    auto stop = std::chrono::steady_clock::now();
    if (i >= kBenchWarmupSteps) {
      samples_ms.push_back(std::chrono::duration<double, std::milli>(stop - start).count());
    }
  }

  BenchReport r;
  r.kind = kind;
  r.nesting = n;
  r.horizon = horizon;
  r.steps = steps;
  double sum = 0;
  for (double v : samples_ms) sum += v;
  r.mean_ms = sum / static_cast<double>(steps);
  double sq = 0;
  for (double v : samples_ms) sq += (v - r.mean_ms) * (v - r.mean_ms);
  r.variance_ms2 = sq / static_cast<double>(steps - 1);
  return r;
}

SweepResult run_sweep(TemplateKind kind, std::size_t n, std::span<const std::size_t> horizons,
                      std::size_t steps, std::uint64_t seed) {
  SweepResult out;
  std::vector<double> hs, means;
  for (auto h : horizons) {
    out.points.push_back(run_bench(kind, n, h, steps, seed));
    hs.push_back(static_cast<double>(h));
    means.push_back(out.points.back().mean_ms);
  }
  out.slope = loglog_slope(hs, means);
  return out;
}

double loglog_slope(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw std::invalid_argument("loglog_slope needs two or more paired points");
  }
  double mx = 0, my = 0;
  std::vector<double> lx, ly;
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (!(x[k] > 0) || !(y[k] > 0)) throw std::invalid_argument("loglog_slope needs positive data");
    lx.push_back(std::log(x[k]));
    ly.push_back(std::log(y[k]));
    mx += lx.back();
    my += ly.back();
  }
  mx /= static_cast<double>(x.size());
  my /= static_cast<double>(x.size());
  double sxy = 0, sxx = 0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    sxy += (lx[k] - mx) * (ly[k] - my);
    sxx += (lx[k] - mx) * (lx[k] - mx);
  }
  return sxy / sxx;
}

}  // namespace robmon
