#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace robmon {

/// Malformed formula text, or a formula that cannot be monitored as written.
class FormulaError : public std::runtime_error {
 public:
  explicit FormulaError(const std::string& what, std::size_t position = npos)
      : std::runtime_error(position == npos ? what
                                            : what + " at position " + std::to_string(position)),
        position_(position) {}

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Bad trace or predicate data (files, samples, bindings).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Inconsistent run configuration, e.g. a predictor that cannot feed the horizon.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Perfect look-ahead requested past the end of the loaded trace.
class TraceExhausted : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

}  // namespace robmon
