#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "robmon/predicate.hpp"

namespace robmon {

/// Benchmark formula families: nested eventually (E) or nested until (U)
/// under an implication, with total horizon H split evenly over n levels.
enum class TemplateKind { E, U };

std::optional<TemplateKind> parse_template_kind(std::string_view text);
std::string to_string(TemplateKind kind);

/// Formula text for `p0 -> psi_n(H/n)`.
///
///   E: psi_1(h) = eventually[0,h] p_a
///      psi_n(h) = eventually[0,h] (p_a and psi_{n-1}(h))
///   U: psi_1(h) = p_a U[0,h] p_b
///      psi_n(h) = p_a U[0,h] (p_b and psi_{n-1}(h))
///
/// Every level uses fresh atoms p1, p2, ... in order. The U family is read
/// with the nested argument at the same h and four distinct atoms per level.
/// Throws std::invalid_argument unless 1 <= n <= 9 and n divides H.
std::string gen_template(TemplateKind kind, std::size_t n, std::size_t horizon);

struct TemplateInstance {
  std::string text;
  PredicateMap predicates;             // p_k : -5 <= x_k <= 5
  std::vector<std::string> variables;  // x_0, x_1, ...
};

TemplateInstance make_template(TemplateKind kind, std::size_t n, std::size_t horizon);

}  // namespace robmon
