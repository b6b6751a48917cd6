#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "robmon/formula.hpp"
#include "robmon/predicate.hpp"
#include "robmon/rho.hpp"
#include "robmon/trace.hpp"

namespace robmon {

// Settling-time scenario on a normalized air-to-fuel ratio signal `lambda`.
// The in-band predicate is `inb : 0.9 <= lambda <= 1.1`; "out of bounds" is
// its negation.

enum class CaseVariant {
  Past,    // pt:   out -> once[0,1s] historically[0,1s] inb
  Future,  // ft:   out -> eventually[0,1s] always[0,1s] inb
  Mixed,   // ptft: historically[0,2s] (out -> eventually[0,1s] always[0,1s] inb)
};

std::optional<CaseVariant> parse_case_variant(std::string_view text);
std::string to_string(CaseVariant variant);

/// Formula text with bounds in seconds (parse with seconds_per_sample).
std::string case_study_formula_text(CaseVariant variant);

/// The variant's formula in samples. Throws FormulaError when 1 s or 2 s is
/// not a whole number of sampling periods.
Formula case_study_formula(CaseVariant variant, double delta_t);

PredicateMap case_study_predicates();

struct Scenario {
  double excursion_start = 5.0;  // seconds
  double excursion_len = 0.3;    // seconds
  double total = 10.0;           // seconds
  double delta_t = 0.01;         // seconds
};

/// lambda = 1.0 everywhere except a rectangular excursion to 1.2 over
/// [start, start + len). Samples at k * delta_t for k = 0 .. total/delta_t.
/// Throws std::invalid_argument on bad geometry.
Trace gen_case_study_trace(double excursion_start, double excursion_len, double total,
                           double delta_t);
Trace gen_case_study_trace(const Scenario& scenario);

struct CaseStudyRow {
  std::size_t step = 0;
  double time = 0.0;
  double lambda = 0.0;
  Rho robustness = 0.0;
};

/// Monitors one variant over the scenario trace: no predictor for the
/// past-only variant, zero-order hold for the others. One row per sample.
std::vector<CaseStudyRow> run_case_study(CaseVariant variant, const Scenario& scenario);

}  // namespace robmon
