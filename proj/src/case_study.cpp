#include "robmon/case_study.hpp"

#include <cmath>
#include <stdexcept>

#include "robmon/monitor.hpp"
#include "robmon/parser.hpp"

namespace robmon {

std::optional<CaseVariant> parse_case_variant(std::string_view text) {
  if (text == "pt") return CaseVariant::Past;
  if (text == "ft") return CaseVariant::Future;
  if (text == "ptft") return CaseVariant::Mixed;
  return std::nullopt;
}

std::string to_string(CaseVariant variant) {
  switch (variant) {
    case CaseVariant::Past:
      return "pt";
    case CaseVariant::Future:
      return "ft";
    case CaseVariant::Mixed:
      return "ptft";
  }
  return {};
}

std::string case_study_formula_text(CaseVariant variant) {
  switch (variant) {
    case CaseVariant::Past:
      return "not inb -> once[0,1] historically[0,1] inb";
    case CaseVariant::Future:
      return "not inb -> eventually[0,1] always[0,1] inb";
    case CaseVariant::Mixed:
      return "historically[0,2] (not inb -> eventually[0,1] always[0,1] inb)";
  }
  return {};
}

Formula case_study_formula(CaseVariant variant, double delta_t) {
  return parse_formula(case_study_formula_text(variant), ParseOptions{delta_t});
}

PredicateMap case_study_predicates() {
  PredicateMap m;
  m.emplace("inb", Predicate{"inb", "lambda", Between{0.9, 1.1}});
  return m;
}

Trace gen_case_study_trace(double excursion_start, double excursion_len, double total,
                           double delta_t) {
  if (!(delta_t > 0) || !(total > 0)) {
    throw std::invalid_argument("invalid geometry: total and delta_t must be positive");
  }
  if (excursion_start < 0 || excursion_len < 0 || excursion_start + excursion_len > total) {
    throw std::invalid_argument("invalid geometry: excursion must lie within [0, total]");
  }
  const auto count = static_cast<std::size_t>(std::llround(total / delta_t)) + 1;
  const auto first = static_cast<std::size_t>(std::llround(excursion_start / delta_t));
  const auto end = first + static_cast<std::size_t>(std::llround(excursion_len / delta_t));

  std::vector<StateSample> samples(count);
  for (std::size_t k = 0; k < count; ++k) {
    samples[k].time = static_cast<double>(k) * delta_t;
    samples[k].values = {k >= first && k < end ? 1.2 : 1.0};
  }
  return make_trace({"lambda"}, std::move(samples));
}

Trace gen_case_study_trace(const Scenario& s) {
  return gen_case_study_trace(s.excursion_start, s.excursion_len, s.total, s.delta_t);
}

std::vector<CaseStudyRow> run_case_study(CaseVariant variant, const Scenario& scenario) {
  Trace trace = gen_case_study_trace(scenario);
  Monitor monitor(case_study_formula(variant, scenario.delta_t), case_study_predicates(),
                  trace.variables);
  const auto mode = monitor.horizon() == 0 ? PredictorMode::None : PredictorMode::Hold;

  std::vector<CaseStudyRow> rows;
  rows.reserve(trace.size());
  for (std::size_t i = 0; i < trace.size(); ++i) {
    auto predictions = predict(mode, trace, i, monitor.horizon());
    Rho r = monitor.step(trace[i], predictions);
    rows.push_back({i, trace[i].time, trace[i].values[0], r});
  }
  return rows;
}

}  // namespace robmon
