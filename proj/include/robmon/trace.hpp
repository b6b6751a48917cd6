#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "robmon/predicate.hpp"

namespace robmon {

/// Uniformly sampled trace. delta_t is inferred from the first two samples
/// and is absent for single-sample traces.
struct Trace {
  std::vector<std::string> variables;
  std::vector<StateSample> samples;
  std::optional<double> delta_t;

  std::size_t size() const { return samples.size(); }
  const StateSample& operator[](std::size_t i) const { return samples[i]; }

  /// First n samples (n is clamped to size()).
  Trace prefix(std::size_t n) const;
};

/// Relative tolerance on |t[k+1] - t[k] - delta_t|.
inline constexpr double kUniformityTolerance = 1e-6;

/// Parses trace CSV: header `time,var1,...`, then one row per sample.
/// Lines starting with '#' and blank lines are skipped. Throws InputError.
Trace parse_trace(std::string_view csv);
Trace load_trace(const std::filesystem::path& path);

/// Builds a trace from raw samples, validating NaN and uniform spacing the
/// same way the CSV loader does.
Trace make_trace(std::vector<std::string> variables, std::vector<StateSample> samples);

enum class PredictorMode {
  Hold,     // repeat s_i for every horizon slot
  Perfect,  // read s_{i+1..i+Hrz} from the trace
  None,     // only for formulas with zero horizon
};

std::optional<PredictorMode> parse_predictor_mode(std::string_view text);
std::string to_string(PredictorMode mode);

/// Throws ConfigError if mode cannot supply `horizon` samples at all.
void check_predictor(PredictorMode mode, std::size_t horizon);

/// The `horizon` samples following s_i. Throws ConfigError for None with a
/// positive horizon and TraceExhausted when Perfect runs past the end.
std::vector<StateSample> predict(PredictorMode mode, const Trace& trace, std::size_t i,
                                 std::size_t horizon);

}  // namespace robmon
