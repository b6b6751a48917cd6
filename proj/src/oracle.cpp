#include "robmon/oracle.hpp"

#include <algorithm>
#include <stdexcept>

#include "robmon/errors.hpp"

namespace robmon {

OfflineSemantics::OfflineSemantics(const Formula& formula, const PredicateMap& predicates,
                                   const Trace& trace, DistanceFn distance)
    : formula_(formula), trace_(trace), distance_(std::move(distance)) {
  bindings_.resize(formula_.size());
  for (std::size_t k = 0; k < formula_.size(); ++k) {
    const Node& n = formula_.node(k);
    if (n.op != Op::Atom) continue;
    auto it = predicates.find(n.atom);
    if (it == predicates.end()) throw InputError("unbound atom: " + n.atom);
    bindings_[k] = robmon::bind(it->second, trace_.variables);
  }
  rho_cache_.assign(formula_.size() * trace_.size(), std::nullopt);
  bool_cache_.assign(formula_.size() * trace_.size(), -1);
}

void OfflineSemantics::check_index(std::size_t i) const {
  if (i >= trace_.size()) {
    throw std::out_of_range("index " + std::to_string(i) + " out of range for trace of length " +
                            std::to_string(trace_.size()));
  }
}

Rho OfflineSemantics::robustness(std::size_t node, std::size_t i) {
  check_index(i);
  return eval(node, i);
}

bool OfflineSemantics::holds(std::size_t node, std::size_t i) {
  check_index(i);
  return eval_bool(node, i);
}

Rho OfflineSemantics::eval(std::size_t node, std::size_t i) {
  auto& slot = rho_cache_[node * trace_.size() + i];
  if (slot) return *slot;

  const Node& n = formula_.node(node);
  const std::size_t last = trace_.size() - 1;
  Rho out = kNegInf;
  switch (n.op) {
    case Op::True:
      out = kPosInf;
      break;
    case Op::Atom:
      out = distance_ ? distance_(trace_[i], bindings_[node])
                      : signed_distance(trace_[i], bindings_[node]);
      break;
    case Op::Not:
      out = -eval(n.lhs, i);
      break;
    case Op::Or:
      out = std::max(eval(n.lhs, i), eval(n.rhs, i));
      break;
    case Op::Until: {
      // max over h in [i+l, min(i+u, last)] of min(rhs(h), min over r in [i, h) of lhs(r))
      const std::size_t from = i + n.interval.lower;
      const std::size_t to = std::min(i + *n.interval.upper, last);
      for (std::size_t h = from; h <= to; ++h) {
        Rho inner = eval(n.rhs, h);
        for (std::size_t r = i; r < h; ++r) inner = std::min(inner, eval(n.lhs, r));
        out = std::max(out, inner);
      }
      break;
    }
    case Op::Since: {
      // max over h in [max(0, i-u), i-l] of min(rhs(h), min over r in (h, i] of lhs(r))
      if (i < n.interval.lower) break;
      const std::size_t to = i - n.interval.lower;
      std::size_t from = 0;
      if (n.interval.upper && i > *n.interval.upper) from = i - *n.interval.upper;
      for (std::size_t h = from; h <= to; ++h) {
        Rho inner = eval(n.rhs, h);
        for (std::size_t r = h + 1; r <= i; ++r) inner = std::min(inner, eval(n.lhs, r));
        out = std::max(out, inner);
      }
      break;
    }
  }
  slot = out;
  return out;
}

bool OfflineSemantics::eval_bool(std::size_t node, std::size_t i) {
  auto& slot = bool_cache_[node * trace_.size() + i];
  if (slot >= 0) return slot != 0;

  const Node& n = formula_.node(node);
  const std::size_t last = trace_.size() - 1;
  bool out = false;
  switch (n.op) {
    case Op::True:
      out = true;
      break;
    case Op::Atom:
      out = signed_distance(trace_[i], bindings_[node]) >= 0;
      break;
    case Op::Not:
      out = !eval_bool(n.lhs, i);
      break;
    case Op::Or:
      out = eval_bool(n.lhs, i) || eval_bool(n.rhs, i);
      break;
    case Op::Until: {
      const std::size_t from = i + n.interval.lower;
      const std::size_t to = std::min(i + *n.interval.upper, last);
      for (std::size_t h = from; h <= to && !out; ++h) {
        if (!eval_bool(n.rhs, h)) continue;
        bool left = true;
        for (std::size_t r = i; r < h && left; ++r) left = eval_bool(n.lhs, r);
        out = left;
      }
      break;
    }
    case Op::Since: {
      if (i < n.interval.lower) break;
      const std::size_t to = i - n.interval.lower;
      std::size_t from = 0;
      if (n.interval.upper && i > *n.interval.upper) from = i - *n.interval.upper;
      for (std::size_t h = from; h <= to && !out; ++h) {
        if (!eval_bool(n.rhs, h)) continue;
        bool left = true;
        for (std::size_t r = h + 1; r <= i && left; ++r) left = eval_bool(n.lhs, r);
        out = left;
      }
      break;
    }
  }
  slot = out ? 1 : 0;
  return out;
}

Rho offline_robustness(const Formula& formula, const PredicateMap& predicates, const Trace& trace,
                       std::size_t i) {
  return OfflineSemantics(formula, predicates, trace).robustness(i);
}

bool boolean_eval(const Formula& formula, const PredicateMap& predicates, const Trace& trace,
                  std::size_t i) {
  return OfflineSemantics(formula, predicates, trace).holds(i);
}

}  // namespace robmon
