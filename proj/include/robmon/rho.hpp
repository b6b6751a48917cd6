#pragma once

#include <algorithm>
#include <initializer_list>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace robmon {

// Robustness values live on the extended reals. IEEE doubles already give an
// exact, total negation on {-inf, +inf}; NaN never enters (rejected at load).
using Rho = double;

inline constexpr Rho kPosInf = std::numeric_limits<Rho>::infinity();
inline constexpr Rho kNegInf = -std::numeric_limits<Rho>::infinity();

/// Join (max). The empty join is -inf.
inline Rho emax(std::span<const Rho> values) {
  Rho out = kNegInf;
  for (Rho v : values) out = std::max(out, v);
  return out;
}

/// Meet (min). The empty meet is +inf.
inline Rho emin(std::span<const Rho> values) {
  Rho out = kPosInf;
  for (Rho v : values) out = std::min(out, v);
  return out;
}

inline Rho emax(std::initializer_list<Rho> values) {
  return emax(std::span<const Rho>(values.begin(), values.size()));
}
inline Rho emin(std::initializer_list<Rho> values) {
  return emin(std::span<const Rho>(values.begin(), values.size()));
}

/// Shortest round-trip decimal, or "inf" / "-inf".
std::string format_rho(Rho value);

/// Inverse of format_rho. Returns nullopt for anything that is not a number or +-inf.
std::optional<Rho> parse_rho(std::string_view text);

}  // namespace robmon
