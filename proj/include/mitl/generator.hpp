#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mitl/rational.hpp"
#include "mitl/trace.hpp"

namespace mitl {

/// One generated signal. Values switch at exponentially distributed times
/// with mean `rate` switches per time unit; rate 0 keeps the initial value.
struct VariableProfile {
  std::string name;
  Rational min{0};
  Rational max{0};
  double rate = 0.0;
  /// Integer values moving by +-1 per switch instead of uniform jumps.
  bool discrete = false;
  /// Granularity of real values.
  Rational resolution{1, 10};
  /// Starting value; drawn from the range when absent.
  std::optional<Rational> initial;
  /// For discrete variables: also emit 0/1 columns <prefix><value>.
  std::string one_hot_prefix;
};

struct GeneratorProfile {
  std::string name;
  Rational duration{30};
  /// Switch times are multiples of this.
  Rational time_quantum{1, 100};
  std::vector<VariableProfile> variables;
};

/// Built-in profiles: "at" (speed, rpm, gear with g1..g4) and "at-gear3"
/// (same signals, gear held at 3). Throws mitl::Error for other names.
GeneratorProfile builtin_profile(const std::string& name);
std::vector<std::string> builtin_profile_names();

/// Profile from JSON text:
/// {"name", "duration", "time_quantum", "variables": [{"name", "min", "max",
///  "rate", "discrete", "resolution", "initial", "one_hot_prefix"}]}.
/// Rational fields accept numbers or decimal strings.
GeneratorProfile parse_profile_json(const std::string& text);

/// Throws mitl::Error describing the first problem.
void validate_profile(const GeneratorProfile& profile);

/// `count` traces named "<profile>-<seed>-<i>". Same inputs give the same
/// traces on every platform.
std::vector<TimedTrace> generate_synthetic_traces(const GeneratorProfile& profile, std::size_t count,
                                                  std::uint64_t seed);

}  // namespace mitl
