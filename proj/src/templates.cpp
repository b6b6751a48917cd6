#include "robmon/templates.hpp"

#include <stdexcept>

namespace robmon {

std::optional<TemplateKind> parse_template_kind(std::string_view text) {
  if (text == "E" || text == "e") return TemplateKind::E;
  if (text == "U" || text == "u") return TemplateKind::U;
  return std::nullopt;
}

std::string to_string(TemplateKind kind) { return kind == TemplateKind::E ? "E" : "U"; }

namespace {

std::string atom(std::size_t k) { return "p" + std::to_string(k); }

// Writes psi_level(h) using atoms starting at `next`, advancing it.
std::string psi(TemplateKind kind, std::size_t level, const std::string& window,
                std::size_t& next) {
  if (kind == TemplateKind::E) {
    std::string a = atom(next++);
    if (level == 1) return "eventually" + window + " " + a;
    return "eventually" + window + " (" + a + " and " + psi(kind, level - 1, window, next) + ")";
  }
  std::string a = atom(next++);
  std::string b = atom(next++);
  if (level == 1) return a + " U" + window + " " + b;
  return a + " U" + window + " (" + b + " and (" + psi(kind, level - 1, window, next) + "))";
}

}  // namespace

std::string gen_template(TemplateKind kind, std::size_t n, std::size_t horizon) {
  if (n < 1 || n > 9) throw std::invalid_argument("nesting n must be in 1..9");
  if (horizon % n != 0) throw std::invalid_argument("n must divide H");
  std::string window = "[0," + std::to_string(horizon / n) + "]";
  std::size_t next = 1;
  return atom(0) + " -> " + psi(kind, n, window, next);
}

TemplateInstance make_template(TemplateKind kind, std::size_t n, std::size_t horizon) {
  TemplateInstance out;
  out.text = gen_template(kind, n, horizon);
  const std::size_t atoms = kind == TemplateKind::E ? n + 1 : 2 * n + 1;
  for (std::size_t k = 0; k < atoms; ++k) {
    std::string var = "x" + std::to_string(k);
    out.variables.push_back(var);
    out.predicates.emplace(atom(k), Predicate{atom(k), var, Between{-5.0, 5.0}});
  }
  return out;
}

}  // namespace robmon
