#pragma once

#include <cstddef>
#include <filesystem>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "robmon/rho.hpp"

namespace robmon {

/// One sampling instant: a timestamp and the state vector, ordered like the
/// owning trace's variable list.
struct StateSample {
  double time = 0.0;
  std::vector<double> values;

  bool operator==(const StateSample&) const = default;
};

struct AtMost {
  double bound;
  bool operator==(const AtMost&) const = default;
};
struct AtLeast {
  double bound;
  bool operator==(const AtLeast&) const = default;
};
struct Between {
  double lower;
  double upper;
  bool operator==(const Between&) const = default;
};

/// Closed subset of the real line that an atom observes.
using SetSpec = std::variant<AtMost, AtLeast, Between>;

struct Predicate {
  std::string name;
  std::string variable;
  SetSpec set;

  bool operator==(const Predicate&) const = default;
};

using PredicateMap = std::map<std::string, Predicate, std::less<>>;

/// Signed Euclidean distance from x to the set: positive inside, negative
/// outside, zero on the boundary.
Rho signed_distance(double x, const SetSpec& set);

/// A predicate whose variable has been looked up in a concrete variable list.
struct BoundPredicate {
  Predicate predicate;
  std::size_t slot = 0;
};

/// Throws InputError("unknown variable ...") if the variable is not listed.
BoundPredicate bind(const Predicate& predicate, std::span<const std::string> variables);

/// Throws InputError if the sample has no value at the bound slot.
Rho signed_distance(const StateSample& sample, const BoundPredicate& predicate);

/// Hook for evaluating an atom. Defaults to signed_distance; tests wrap it
/// (e.g. to scale every distance by a positive constant).
using DistanceFn = std::function<Rho(const StateSample&, const BoundPredicate&)>;

/// Parses one predicate line, `name : var <= c`, `name : var >= c` or
/// `name : a <= var <= b`. Throws InputError.
Predicate parse_predicate(std::string_view line);

/// Parses a predicate file body: one predicate per line, '#' starts a comment.
PredicateMap parse_predicates(std::string_view text);
PredicateMap load_predicates(const std::filesystem::path& path);

std::string to_string(const Predicate& predicate);

}  // namespace robmon
