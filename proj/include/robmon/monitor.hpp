#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "robmon/formula.hpp"
#include "robmon/predicate.hpp"
#include "robmon/rho.hpp"

namespace robmon {

/// On-line robustness monitor.
///
/// Keeps a |formula| x (Hst + 1 + Hrz) table of subformula robustness values,
/// where column 0 is the current step, negative columns are the past and
/// positive columns hold values computed from predicted samples. A Pre entry
/// per unbounded-Since row carries that row's value from before the table's
/// left edge, so memory stays fixed no matter how long the stream runs.
///
/// Each step shifts the atom rows one column left, then refills every row
/// from the deepest subformula up to the root. Past-operator rows are filled
/// left to right, everything else right to left.
///
/// Cells whose absolute time is before the first sample are undefined. Reads
/// of such cells follow a fixed convention: a Since trigger operand reads as
/// -inf, a Since left operand as +inf and the Since chain value as -inf, which
/// reproduces the clamped finite-trace semantics during warm-up.
///
/// Not thread-safe; a single Monitor must be stepped from one thread at a time.
class Monitor {
 public:
  /// Throws InputError if an atom has no predicate or a predicate names a
  /// variable missing from `variables`.
  Monitor(Formula formula, const PredicateMap& predicates, std::span<const std::string> variables,
          DistanceFn distance = {});

  /// Feeds s_i and exactly horizon() predicted samples; returns the root's
  /// robustness at step i. Throws std::invalid_argument on a length mismatch.
  Rho step(const StateSample& current, std::span<const StateSample> predictions);

  const Formula& formula() const { return formula_; }
  std::size_t horizon() const { return horizon_; }
  std::size_t history() const { return history_; }
  std::size_t width() const { return history_ + 1 + horizon_; }
  std::size_t height() const { return formula_.size(); }

  /// Number of completed steps; the next call to step() computes step `steps()`.
  std::size_t steps() const { return steps_; }

  /// Leftmost column a row is recomputed on: -Hst + hst(row).
  std::ptrdiff_t first_column(std::size_t row) const;

  /// Table cell after the last step, or nullopt when undefined (no step yet,
  /// absolute time before the first sample, or left of the row's window).
  std::optional<Rho> cell(std::size_t row, std::ptrdiff_t column) const;

  /// Pre entry of a row; -inf for rows that are not unbounded Since.
  Rho pre(std::size_t row) const { return pre_.at(row); }

  /// Re-evaluates one cell from the current table contents. For atom rows
  /// this returns the stored value. Requires a prior step().
  Rho cr(std::size_t row, std::ptrdiff_t column) const;

  std::size_t cell_count() const { return table_.size(); }
  std::size_t pre_count() const { return pre_.size(); }

 private:
  Rho& at(std::size_t row, std::ptrdiff_t column) {
    return table_[row * width() + static_cast<std::size_t>(column + offset())];
  }
  Rho at(std::size_t row, std::ptrdiff_t column) const {
    return table_[row * width() + static_cast<std::size_t>(column + offset())];
  }
  std::ptrdiff_t offset() const { return static_cast<std::ptrdiff_t>(history_); }
  std::ptrdiff_t hrz() const { return static_cast<std::ptrdiff_t>(horizon_); }

  Rho atom_value(std::size_t row, const StateSample& sample) const;

  // `now` is the step the table is being evaluated at.
  Rho compute(std::size_t row, std::ptrdiff_t column, std::ptrdiff_t now) const;
  Rho compute_until(const Node& n, std::ptrdiff_t column) const;
  Rho compute_since(std::size_t row, const Node& n, std::ptrdiff_t column,
                    std::ptrdiff_t now) const;

  Formula formula_;
  std::size_t horizon_ = 0;
  std::size_t history_ = 0;
  std::vector<Rho> table_;
  std::vector<Rho> pre_;
  std::vector<BoundPredicate> bindings_;
  std::vector<std::size_t> binding_of_row_;  // valid for atom rows
  std::vector<std::size_t> atom_rows_;
  std::vector<std::size_t> unbounded_since_rows_;
  DistanceFn distance_;
  std::size_t steps_ = 0;
};

}  // namespace robmon
