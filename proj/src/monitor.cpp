#include "robmon/monitor.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "robmon/errors.hpp"

namespace robmon {

Monitor::Monitor(Formula formula, const PredicateMap& predicates,
                 std::span<const std::string> variables, DistanceFn distance)
    : formula_(std::move(formula)),
      horizon_(formula_.horizon()),
      history_(formula_.history()),
      distance_(std::move(distance)) {
  std::string missing;
  for (const auto& name : formula_.atoms()) {
    if (!predicates.count(name)) missing += (missing.empty() ? "" : ", ") + name;
  }
  if (!missing.empty()) throw InputError("unbound atom: " + missing);

  table_.assign(height() * width(), kNegInf);
  pre_.assign(height(), kNegInf);
  binding_of_row_.assign(height(), 0);

  for (std::size_t k = 0; k < height(); ++k) {
    const Node& n = formula_.node(k);
    if (n.op == Op::Atom) {
      binding_of_row_[k] = bindings_.size();
      bindings_.push_back(robmon::bind(predicates.find(n.atom)->second, variables));
      atom_rows_.push_back(k);
    } else if (n.is_unbounded_since()) {
      unbounded_since_rows_.push_back(k);
    }
  }
}

std::ptrdiff_t Monitor::first_column(std::size_t row) const {
  return static_cast<std::ptrdiff_t>(formula_.node(row).hst) - offset();
}

std::optional<Rho> Monitor::cell(std::size_t row, std::ptrdiff_t column) const {
  if (row >= height() || column < -offset() || column > hrz()) return std::nullopt;
  if (steps_ == 0) return std::nullopt;
  auto now = static_cast<std::ptrdiff_t>(steps_) - 1;
  if (now + column < 0 || column < first_column(row)) return std::nullopt;
  return at(row, column);
}

Rho Monitor::atom_value(std::size_t row, const StateSample& sample) const {
  const auto& b = bindings_[binding_of_row_[row]];
  return distance_ ? distance_(sample, b) : signed_distance(sample, b);
}

Rho Monitor::step(const StateSample& current, std::span<const StateSample> predictions) {
  if (predictions.size() != horizon_) {
    throw std::invalid_argument("prediction length mismatch: expected " +
                                std::to_string(horizon_) + " samples, got " +
                                std::to_string(predictions.size()));
  }
  const auto now = static_cast<std::ptrdiff_t>(steps_);

  // Save the leftmost computed value of each unbounded Since row before the
  // table moves on. Only cells that referred to real samples are kept.
  for (auto k : unbounded_since_rows_) {
    auto c = first_column(k);
    if (now >= 1 && now - 1 + c >= 0) pre_[k] = at(k, c);
  }

  for (auto k : atom_rows_) {
    auto row = table_.begin() + static_cast<std::ptrdiff_t>(k * width());
    std::copy(row + 1, row + static_cast<std::ptrdiff_t>(width()), row);
  }

  for (std::size_t k = height(); k-- > 0;) {
    const Node& n = formula_.node(k);
    const auto lo = std::max(first_column(k), -now);
    if (n.op == Op::Atom) {
      for (std::ptrdiff_t j = std::max<std::ptrdiff_t>(lo, 0); j <= hrz(); ++j) {
        at(k, j) = atom_value(k, j == 0 ? current : predictions[static_cast<std::size_t>(j - 1)]);
      }
    } else if (n.op == Op::Since) {
      for (std::ptrdiff_t j = lo; j <= hrz(); ++j) at(k, j) = compute(k, j, now);
    } else {
      for (std::ptrdiff_t j = hrz(); j >= lo; --j) at(k, j) = compute(k, j, now);
    }
  }

  ++steps_;
  return at(Formula::root(), 0);
}

Rho Monitor::cr(std::size_t row, std::ptrdiff_t column) const {
  if (steps_ == 0) throw std::logic_error("cr() before the first step");
  return compute(row, column, static_cast<std::ptrdiff_t>(steps_) - 1);
}

Rho Monitor::compute(std::size_t row, std::ptrdiff_t column, std::ptrdiff_t now) const {
  const Node& n = formula_.node(row);
  switch (n.op) {
    case Op::True:
      return kPosInf;
    case Op::Atom:
      return at(row, column);
    case Op::Not:
      return -at(n.lhs, column);
    case Op::Or:
      return std::max(at(n.lhs, column), at(n.rhs, column));
    case Op::Until:
      return compute_until(n, column);
    case Op::Since:
      return compute_since(row, n, column, now);
  }
  return kNegInf;
}

Rho Monitor::compute_until(const Node& n, std::ptrdiff_t j) const {
  const auto l = static_cast<std::ptrdiff_t>(n.interval.lower);
  const auto u = static_cast<std::ptrdiff_t>(*n.interval.upper);
  if (j + l > hrz()) return kNegInf;

  const Rho* left = &table_[n.lhs * width() + static_cast<std::size_t>(offset())];
  const Rho* right = &table_[n.rhs * width() + static_cast<std::size_t>(offset())];

  Rho tmp_min = kPosInf;
  for (auto jj = j; jj < j + l; ++jj) tmp_min = std::min(tmp_min, left[jj]);
  Rho out = kNegInf;
  const auto last = std::min(hrz(), j + u);
  for (auto jj = j + l; jj <= last; ++jj) {
    out = std::max(out, std::min(tmp_min, right[jj]));
    tmp_min = std::min(tmp_min, left[jj]);
  }
  return out;
}

Rho Monitor::compute_since(std::size_t row, const Node& n, std::ptrdiff_t j,
                           std::ptrdiff_t now) const {
  const auto l = static_cast<std::ptrdiff_t>(n.interval.lower);
  // Reads before the first sample: trigger -> -inf, left operand -> +inf.
  auto trigger = [&](std::ptrdiff_t c) { return now + c < 0 ? kNegInf : at(n.rhs, c); };
  auto left = [&](std::ptrdiff_t c) { return now + c < 0 ? kPosInf : at(n.lhs, c); };

  Rho tmp_min = kPosInf;
  for (auto jj = j - l + 1; jj <= j; ++jj) tmp_min = std::min(tmp_min, left(jj));

  if (!n.interval.unbounded()) {
    const auto u = static_cast<std::ptrdiff_t>(*n.interval.upper);
    Rho out = kNegInf;
    for (auto jj = j - l; jj >= j - u; --jj) {
      if (now + jj < 0) break;  // every remaining disjunct has a -inf trigger
      assert(jj >= first_column(n.rhs));
      out = std::max(out, std::min(tmp_min, trigger(jj)));
      if (jj > j - u) tmp_min = std::min(tmp_min, left(jj));
    }
    return out;
  }

  Rho chain;
  if (j == first_column(row)) {
    chain = pre_[row];
  } else if (now + j - 1 < 0) {
    chain = kNegInf;
  } else {
    chain = at(row, j - 1);
  }
  const Rho carried = std::min(chain, left(j));
  return std::max(std::min(trigger(j - l), tmp_min), carried);
}

}  // namespace robmon
