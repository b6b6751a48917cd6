#include "robmon/rho.hpp"

#include <charconv>
#include <cmath>
#include <system_error>

namespace robmon {

std::string format_rho(Rho value) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc{}) return "nan";
  return std::string(buf, end);
}

std::optional<Rho> parse_rho(std::string_view text) {
  if (text == "inf" || text == "+inf") return kPosInf;
  if (text == "-inf") return kNegInf;
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  Rho value = 0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || end != text.data() + text.size() || std::isnan(value)) {
    return std::nullopt;
  }
  return value;
}

}  // namespace robmon
