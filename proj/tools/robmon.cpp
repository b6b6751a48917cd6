// Command-line front end: monitor a trace, benchmark template formulas, run
// the settling-time case study.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "robmon/bench.hpp"
#include "robmon/case_study.hpp"
#include "robmon/errors.hpp"
#include "robmon/parser.hpp"
#include "robmon/run.hpp"
#include "robmon/templates.hpp"

namespace {

using namespace robmon;

void print_report(const BenchReport& r) {
  std::printf("%s,%zu,%zu,%zu,%.6f,%.6f\n", to_string(r.kind).c_str(), r.nesting, r.horizon,
              r.steps, r.mean_ms, r.variance_ms2);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"robmon: on-line robustness monitoring for past/future metric temporal logic"};
  app.require_subcommand(1);

  // monitor
  RunConfig config;
  std::string predictor = "perfect";
  std::string units = "samples";
  auto* monitor = app.add_subcommand("monitor", "Monitor a trace CSV and write per-step robustness");
  monitor->add_option("--formula", config.formula, "Formula file")->required();
  monitor->add_option("--predicates", config.predicates, "Predicate file")->required();
  monitor->add_option("--trace", config.trace, "Trace CSV")->required();
  monitor->add_option("--predictor", predictor, "hold | perfect | none")
      ->check(CLI::IsMember({"hold", "perfect", "none"}));
  monitor->add_option("--time-units", units, "Interval bounds in samples or seconds")
      ->check(CLI::IsMember({"samples", "seconds"}));
  monitor->add_flag("--fail-on-violation", config.fail_on_violation,
                    "Exit with status 2 if any robustness value is negative");
  monitor->add_option("--out", config.output, "Output CSV")->required();

  // bench
  std::string kind = "E";
  std::size_t nesting = 1;
  std::size_t horizon = 1000;
  std::size_t steps = 100;
  bool sweep = false;
  auto* bench = app.add_subcommand("bench", "Time monitor steps on a template formula");
  bench->add_option("--template", kind, "E | U")->check(CLI::IsMember({"E", "U"}));
  bench->add_option("--n", nesting, "Nesting depth 1..9")->check(CLI::Range(1, 9));
  bench->add_option("--horizon", horizon, "Total horizon H in samples");
  bench->add_option("--steps", steps, "Timed steps (>= 30)");
  bench->add_flag("--sweep", sweep, "Run H in {500,1000,2000,4000} and fit a log-log slope");

  // template
  auto* tmpl = app.add_subcommand("template", "Print a benchmark template formula");
  tmpl->add_option("--template", kind, "E | U")->check(CLI::IsMember({"E", "U"}));
  tmpl->add_option("--n", nesting, "Nesting depth 1..9")->check(CLI::Range(1, 9));
  tmpl->add_option("--horizon", horizon, "Total horizon H in samples");

  // case-study
  std::string variant = "pt";
  Scenario scenario;
  std::string case_out;
  auto* cs = app.add_subcommand("case-study", "Settling-time scenario on a synthetic lambda signal");
  cs->add_option("--variant", variant, "pt | ft | ptft")->check(CLI::IsMember({"pt", "ft", "ptft"}));
  cs->add_option("--dt", scenario.delta_t, "Sampling period (s)");
  cs->add_option("--excursion-start", scenario.excursion_start, "Excursion start (s)");
  cs->add_option("--excursion-len", scenario.excursion_len, "Excursion length (s)");
  cs->add_option("--total", scenario.total, "Trace length (s)");
  cs->add_option("--out", case_out, "Output CSV")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (*monitor) {
    config.predictor = *parse_predictor_mode(predictor);
    config.units = units == "seconds" ? TimeUnits::Seconds : TimeUnits::Samples;
    return run_monitor(config, std::cerr);
  }

  const auto template_kind = *parse_template_kind(kind);

  if (*tmpl) {
    try {
      std::cout << gen_template(template_kind, nesting, horizon) << '\n';
    } catch (const std::invalid_argument& e) {
      std::cerr << "error: " << e.what() << '\n';
      return kExitUsage;
    }
    return kExitOk;
  }

  if (*bench) {
    try {
      std::printf("kind,n,horizon,steps,mean_ms,variance_ms2\n");
      if (sweep) {
        auto result = run_sweep(template_kind, nesting, kSweepHorizons, steps);
        for (const auto& r : result.points) print_report(r);
        std::printf("# log-log slope of mean step time vs horizon: %.3f\n", result.slope);
      } else {
        print_report(run_bench(template_kind, nesting, horizon, steps));
      }
    } catch (const std::invalid_argument& e) {
      std::cerr << "error: " << e.what() << '\n';
      return kExitUsage;
    }
    return kExitOk;
  }

  if (*cs) {
    try {
      auto rows = run_case_study(*parse_case_variant(variant), scenario);
      std::ofstream out(case_out);
      if (!out) {
        std::cerr << "error: cannot write " << case_out << '\n';
        return kExitUsage;
      }
      write_case_study_csv(out, rows);
    } catch (const FormulaError& e) {
      std::cerr << "formula error: " << e.what() << '\n';
      return kExitFormula;
    } catch (const std::invalid_argument& e) {
      std::cerr << "error: " << e.what() << '\n';
      return kExitUsage;
    }
    return kExitOk;
  }
  return kExitUsage;
}
