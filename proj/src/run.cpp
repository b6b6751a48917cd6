#include "robmon/run.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "robmon/errors.hpp"
#include "robmon/monitor.hpp"
#include "robmon/parser.hpp"

namespace robmon {

std::vector<MonitorRow> monitor_trace(const Formula& formula, const PredicateMap& predicates,
                                      const Trace& trace, PredictorMode mode) {
  Monitor monitor(formula, predicates, trace.variables);
  check_predictor(mode, monitor.horizon());

  std::size_t emitted = trace.size();
  if (mode == PredictorMode::Perfect) {
    emitted = trace.size() > monitor.horizon() ? trace.size() - monitor.horizon() : 0;
  }
  std::vector<MonitorRow> rows;
  rows.reserve(emitted);
  for (std::size_t i = 0; i < emitted; ++i) {
    auto predictions = predict(mode, trace, i, monitor.horizon());
    rows.push_back({i, trace[i].time, monitor.step(trace[i], predictions)});
  }
  return rows;
}

void write_monitor_csv(std::ostream& out, std::span<const MonitorRow> rows) {
  out << "step,time,robustness\n";
  for (const auto& r : rows) {
    out << r.step << ',' << format_rho(r.time) << ',' << format_rho(r.robustness) << '\n';
  }
}

void write_case_study_csv(std::ostream& out, std::span<const CaseStudyRow> rows) {
  out << "step,time,lambda,robustness\n";
  for (const auto& r : rows) {
    out << r.step << ',' << format_rho(r.time) << ',' << format_rho(r.lambda) << ','
        << format_rho(r.robustness) << '\n';
  }
}

namespace {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

int run_monitor(const RunConfig& config, std::ostream& err) {
  try {
    Trace trace = load_trace(config.trace);
    PredicateMap predicates = load_predicates(config.predicates);

    std::string text;
    try {
      text = read_file(config.formula);
    } catch (const InputError& e) {
      throw FormulaError(e.what());
    }
    ParseOptions options;
    if (config.units == TimeUnits::Seconds) {
      if (!trace.delta_t) throw ConfigError("seconds mode needs at least two samples to infer dt");
      options.seconds_per_sample = trace.delta_t;
    }
    Formula formula = parse_formula(text, options);

    auto rows = monitor_trace(formula, predicates, trace, config.predictor);

    std::ofstream out(config.output);
    if (!out) throw ConfigError("cannot write " + config.output.string());
    write_monitor_csv(out, rows);
    if (!out) throw ConfigError("failed writing " + config.output.string());

    if (config.fail_on_violation) {
      for (const auto& r : rows) {
        if (r.robustness < 0) return kExitViolation;
      }
    }
    return kExitOk;
  } catch (const FormulaError& e) {
    err << "formula error: " << e.what() << '\n';
    return kExitFormula;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kExitInputData;
  } catch (const ConfigError& e) {
    err << "configuration error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace robmon
