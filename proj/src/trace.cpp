#include "robmon/trace.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

#include "robmon/errors.hpp"

namespace robmon {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_csv(std::string_view line) {
  std::vector<std::string_view> cells;
  std::size_t start = 0;
  while (true) {
    auto comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      cells.push_back(trim(line.substr(start)));
      return cells;
    }
    cells.push_back(trim(line.substr(start, comma - start)));
    start = comma + 1;
  }
}

void validate(const Trace& t) {
  for (std::size_t k = 0; k < t.samples.size(); ++k) {
    const auto& s = t.samples[k];
    if (s.values.size() != t.variables.size()) {
      throw InputError("missing column at row " + std::to_string(k));
    }
    if (!std::isfinite(s.time)) throw InputError("non-numeric value at row " + std::to_string(k));
    for (double v : s.values) {
      if (std::isnan(v)) throw InputError("non-numeric value at row " + std::to_string(k));
    }
  }
  if (t.samples.size() < 2) return;
  double dt = *t.delta_t;
  if (!(dt > 0)) throw InputError("non-uniform sampling at row 1");
  for (std::size_t k = 1; k < t.samples.size(); ++k) {
    double step = t.samples[k].time - t.samples[k - 1].time;
    if (std::abs(step - dt) > kUniformityTolerance * dt) {
      throw InputError("non-uniform sampling at row " + std::to_string(k));
    }
  }
}

}  // namespace

Trace Trace::prefix(std::size_t n) const {
  Trace out;
  out.variables = variables;
  out.samples.assign(samples.begin(), samples.begin() + std::min(n, samples.size()));
  out.delta_t = out.samples.size() >= 2 ? delta_t : std::nullopt;
  return out;
}

Trace make_trace(std::vector<std::string> variables, std::vector<StateSample> samples) {
  Trace t;
  t.variables = std::move(variables);
  t.samples = std::move(samples);
  if (t.samples.size() >= 2) t.delta_t = t.samples[1].time - t.samples[0].time;
  validate(t);
  return t;
}

Trace parse_trace(std::string_view csv) {
  std::istringstream in{std::string(csv)};
  std::string raw;
  std::vector<std::string> variables;
  std::vector<StateSample> samples;
  bool have_header = false;
  while (std::getline(in, raw)) {
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    auto cells = split_csv(line);
    if (!have_header) {
      if (cells.empty() || cells[0] != "time") {
        throw InputError("missing column: trace header must start with 'time'");
      }
      for (std::size_t c = 1; c < cells.size(); ++c) {
        if (cells[c].empty()) throw InputError("missing column: empty variable name in header");
        variables.emplace_back(cells[c]);
      }
      have_header = true;
      continue;
    }
    std::size_t row = samples.size();
    if (cells.size() != variables.size() + 1) {
      throw InputError("missing column at row " + std::to_string(row));
    }
    StateSample s;
    s.values.reserve(variables.size());
    for (std::size_t c = 0; c < cells.size(); ++c) {
      auto v = parse_rho(cells[c]);
      if (!v || std::isinf(*v)) {
        throw InputError("non-numeric value at row " + std::to_string(row) + ", column " +
                         std::to_string(c));
      }
      if (c == 0) {
        s.time = *v;
      } else {
        s.values.push_back(*v);
      }
    }
    samples.push_back(std::move(s));
  }
  if (!have_header) throw InputError("missing column: trace has no header");
  return make_trace(std::move(variables), std::move(samples));
}

Trace load_trace(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open trace file " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_trace(buf.str());
}

std::optional<PredictorMode> parse_predictor_mode(std::string_view text) {
  if (text == "hold") return PredictorMode::Hold;
  if (text == "perfect") return PredictorMode::Perfect;
  if (text == "none") return PredictorMode::None;
  return std::nullopt;
}

std::string to_string(PredictorMode mode) {
  switch (mode) {
    case PredictorMode::Hold:
      return "hold";
    case PredictorMode::Perfect:
      return "perfect";
    case PredictorMode::None:
      return "none";
  }
  return {};
}

void check_predictor(PredictorMode mode, std::size_t horizon) {
  if (mode == PredictorMode::None && horizon > 0) {
    throw ConfigError("predictor 'none' cannot supply a horizon of " + std::to_string(horizon) +
                      " samples");
  }
}

std::vector<StateSample> predict(PredictorMode mode, const Trace& trace, std::size_t i,
                                 std::size_t horizon) {
  check_predictor(mode, horizon);
  if (i >= trace.size()) throw TraceExhausted("sample index past end of trace");
  std::vector<StateSample> out;
  out.reserve(horizon);
  switch (mode) {
    case PredictorMode::None:
      break;
    case PredictorMode::Hold: {
      double dt = trace.delta_t.value_or(0.0);
      for (std::size_t k = 1; k <= horizon; ++k) {
        StateSample s = trace[i];
        s.time += static_cast<double>(k) * dt;
        out.push_back(std::move(s));
      }
      break;
    }
    case PredictorMode::Perfect:
      if (i + horizon >= trace.size()) {
        throw TraceExhausted("trace exhausted: perfect prediction at step " + std::to_string(i) +
                             " needs " + std::to_string(horizon) + " more samples");
      }
      out.assign(trace.samples.begin() + static_cast<std::ptrdiff_t>(i + 1),
                 trace.samples.begin() + static_cast<std::ptrdiff_t>(i + 1 + horizon));
      break;
  }
  return out;
}

}  // namespace robmon
