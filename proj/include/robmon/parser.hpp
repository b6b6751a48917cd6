#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "robmon/formula.hpp"

namespace robmon {

struct ParseOptions {
  /// When set, interval bounds are read as seconds and converted to sample
  /// counts with this sampling period. Each bound must be an exact multiple.
  std::optional<double> seconds_per_sample;
};

/// Parses formula text into a surface tree.
///
/// Grammar, lowest precedence first: `->` (right associative), `or` / `\/`,
/// `and` / `/\`, a single non-associative `U[a,b]` / `S[a,b]`, then the
/// unary operators `not`/`!`, `eventually`/`<>`, `always`/`[]`,
/// `once`/`<*>`, `historically`/`[*]`, `next`, `prev`. Intervals are
/// `[a,b]` or `[a,inf)`; only the past operators accept `inf`.
///
/// Throws FormulaError carrying the byte offset of the offending token.
Expr parse(std::string_view text, const ParseOptions& options = {});

/// Parses and desugars in one go.
Formula parse_formula(std::string_view text, const ParseOptions& options = {});

/// Prints a surface tree in the grammar accepted by parse().
std::string to_string(const Expr& e);

}  // namespace robmon
