#include "robmon/predicate.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

#include "robmon/errors.hpp"

namespace robmon {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

std::optional<double> parse_number(std::string_view s) {
  auto v = parse_rho(trim(s));
  if (!v || std::isinf(*v)) return std::nullopt;
  return v;
}

std::vector<std::string_view> split_on(std::string_view s, std::string_view sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.push_back(trim(s.substr(start)));
      return parts;
    }
    parts.push_back(trim(s.substr(start, pos - start)));
    start = pos + sep.size();
  }
}

}  // namespace

Rho signed_distance(double x, const SetSpec& set) {
  return std::visit(
      [x](const auto& s) -> Rho {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, AtMost>) {
          return s.bound - x;
        } else if constexpr (std::is_same_v<T, AtLeast>) {
          return x - s.bound;
        } else {
          return std::min(x - s.lower, s.upper - x);
        }
      },
      set);
}

BoundPredicate bind(const Predicate& predicate, std::span<const std::string> variables) {
  auto it = std::find(variables.begin(), variables.end(), predicate.variable);
  if (it == variables.end()) {
    throw InputError("unknown variable '" + predicate.variable + "' in predicate '" +
                     predicate.name + "'");
  }
  return {predicate, static_cast<std::size_t>(it - variables.begin())};
}

Rho signed_distance(const StateSample& sample, const BoundPredicate& predicate) {
  if (predicate.slot >= sample.values.size()) {
    throw InputError("unknown variable '" + predicate.predicate.variable + "' in sample");
  }
  return signed_distance(sample.values[predicate.slot], predicate.predicate.set);
}

Predicate parse_predicate(std::string_view line) {
  auto colon = line.find(':');
  if (colon == std::string_view::npos) {
    throw InputError("predicate line missing ':': " + std::string(line));
  }
  Predicate p;
  p.name = std::string(trim(line.substr(0, colon)));
  if (!is_identifier(p.name)) throw InputError("bad predicate name '" + p.name + "'");

  auto body = trim(line.substr(colon + 1));
  auto fail = [&]() -> InputError {
    return InputError("cannot parse predicate '" + p.name + "': " + std::string(body));
  };

  auto le = split_on(body, "<=");
  if (le.size() == 3) {
    auto a = parse_number(le[0]);
    auto b = parse_number(le[2]);
    if (!a || !b || !is_identifier(le[1])) throw fail();
    if (*a > *b) throw InputError("empty set in predicate '" + p.name + "': lower > upper");
    p.variable = std::string(le[1]);
    p.set = Between{*a, *b};
    return p;
  }
  if (le.size() == 2) {
    // var <= c
    auto c = parse_number(le[1]);
    if (!c || !is_identifier(le[0])) throw fail();
    p.variable = std::string(le[0]);
    p.set = AtMost{*c};
    return p;
  }
  auto ge = split_on(body, ">=");
  if (ge.size() == 2) {
    auto c = parse_number(ge[1]);
    if (!c || !is_identifier(ge[0])) throw fail();
    p.variable = std::string(ge[0]);
    p.set = AtLeast{*c};
    return p;
  }
  throw fail();
}

PredicateMap parse_predicates(std::string_view text) {
  PredicateMap out;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    Predicate p;
    try {
      p = parse_predicate(line);
    } catch (const InputError& e) {
      throw InputError("line " + std::to_string(lineno) + ": " + e.what());
    }
    if (out.count(p.name)) {
      throw InputError("line " + std::to_string(lineno) + ": duplicate predicate '" + p.name + "'");
    }
    auto name = p.name;
    out.emplace(std::move(name), std::move(p));
  }
  return out;
}

PredicateMap load_predicates(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open predicate file " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_predicates(buf.str());
}

std::string to_string(const Predicate& predicate) {
  return std::visit(
      [&](const auto& s) -> std::string {
        using T = std::decay_t<decltype(s)>;
        std::string head = predicate.name + ": ";
        if constexpr (std::is_same_v<T, AtMost>) {
          return head + predicate.variable + " <= " + format_rho(s.bound);
        } else if constexpr (std::is_same_v<T, AtLeast>) {
          return head + predicate.variable + " >= " + format_rho(s.bound);
        } else {
          return head + format_rho(s.lower) + " <= " + predicate.variable + " <= " +
                 format_rho(s.upper);
        }
      },
      predicate.set);
}

}  // namespace robmon
