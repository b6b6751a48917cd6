#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <vector>

#include "robmon/case_study.hpp"
#include "robmon/formula.hpp"
#include "robmon/predicate.hpp"
#include "robmon/rho.hpp"
#include "robmon/trace.hpp"

namespace robmon {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitViolation = 2,
  kExitInputData = 3,
  kExitFormula = 4,
};

enum class TimeUnits { Samples, Seconds };

struct RunConfig {
  std::filesystem::path formula;
  std::filesystem::path predicates;
  std::filesystem::path trace;
  std::filesystem::path output;
  PredictorMode predictor = PredictorMode::Perfect;
  TimeUnits units = TimeUnits::Samples;
  bool fail_on_violation = false;
};

struct MonitorRow {
  std::size_t step = 0;
  double time = 0.0;
  Rho robustness = 0.0;
};

/// Streams a loaded trace through a fresh monitor. With the perfect
/// predictor only steps 0 .. size-1-Hrz are emitted; otherwise every step.
std::vector<MonitorRow> monitor_trace(const Formula& formula, const PredicateMap& predicates,
                                      const Trace& trace, PredictorMode mode);

/// `step,time,robustness` CSV.
void write_monitor_csv(std::ostream& out, std::span<const MonitorRow> rows);

/// `step,time,lambda,robustness` CSV.
void write_case_study_csv(std::ostream& out, std::span<const CaseStudyRow> rows);

/// The `monitor` subcommand: load, monitor, write CSV. Errors are reported on
/// `err` and mapped to exit codes (1 usage/config, 3 input data, 4 formula);
/// returns kExitViolation if fail_on_violation is set and any emitted value
/// is negative.
int run_monitor(const RunConfig& config, std::ostream& err);

}  // namespace robmon
