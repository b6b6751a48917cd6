#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "robmon/formula.hpp"
#include "robmon/predicate.hpp"
#include "robmon/rho.hpp"
#include "robmon/trace.hpp"

namespace robmon {

/// Offline reference semantics over a finite trace, evaluated straight from
/// the recursive definitions. Shares nothing with Monitor except the
/// distance function.
///
/// Until windows are cut at the last sample, Since windows at the first; an
/// empty window yields -inf. Results are cached per (node, index) within one
/// instance. The trace and predicates must outlive the instance.
class OfflineSemantics {
 public:
  OfflineSemantics(const Formula& formula, const PredicateMap& predicates, const Trace& trace,
                   DistanceFn distance = {});

  /// Robustness of the root at sample i. Throws std::out_of_range.
  Rho robustness(std::size_t i) { return robustness(Formula::root(), i); }
  Rho robustness(std::size_t node, std::size_t i);

  /// Classical finite-trace truth value; an atom holds iff its signed distance is >= 0.
  bool holds(std::size_t i) { return holds(Formula::root(), i); }
  bool holds(std::size_t node, std::size_t i);

 private:
  Rho eval(std::size_t node, std::size_t i);
  bool eval_bool(std::size_t node, std::size_t i);
  void check_index(std::size_t i) const;

  Formula formula_;
  Trace trace_;
  std::vector<BoundPredicate> bindings_;  // indexed by node, valid for atom nodes
  DistanceFn distance_;
  std::vector<std::optional<Rho>> rho_cache_;
  std::vector<signed char> bool_cache_;
};

Rho offline_robustness(const Formula& formula, const PredicateMap& predicates, const Trace& trace,
                       std::size_t i);

bool boolean_eval(const Formula& formula, const PredicateMap& predicates, const Trace& trace,
                  std::size_t i);

}  // namespace robmon
