#include "mitl/generator.hpp"

#include <cmath>
#include <map>
#include <random>
#include <set>

#include <json.hpp>

#include "mitl/error.hpp"

namespace mitl {

namespace {

// Portable draws: std distributions differ between standard libraries.
class Draw {
 public:
  explicit Draw(std::uint64_t seed) : engine_(seed) {}
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  std::uint64_t below(std::uint64_t n) { return engine_() % n; }
  double exponential(double rate) { return -std::log1p(-unit()) / rate; }

 private:
  std::mt19937_64 engine_;
};

Rational quantize_time(double t, const Rational& quantum) {
  double q = quantum.to_double();
  auto steps = static_cast<std::int64_t>(std::ceil(t / q));
  if (steps < 1) steps = 1;
  return quantum * Rational(steps);
}

Rational draw_level(Draw& draw, const VariableProfile& v) {
  if (v.discrete) {
    auto lo = static_cast<std::int64_t>(std::ceil(v.min.to_double()));
    auto hi = static_cast<std::int64_t>(std::floor(v.max.to_double()));
    return Rational(lo + static_cast<std::int64_t>(draw.below(static_cast<std::uint64_t>(hi - lo + 1))));
  }
  Rational span = (v.max - v.min) / v.resolution;
  auto cells = static_cast<std::uint64_t>(std::floor(span.to_double()));
  return v.min + v.resolution * Rational(static_cast<std::int64_t>(draw.below(cells + 1)));
}

Rational next_level(Draw& draw, const VariableProfile& v, const Rational& current) {
  if (!v.discrete) return draw_level(draw, v);
  bool up = draw.below(2) == 1;
  if (current >= v.max) up = false;
  if (current <= v.min) up = true;
  return current + Rational(up ? 1 : -1);
}

using Signal = std::map<Rational, Rational>;  // change time -> value

Signal generate_signal(Draw& draw, const VariableProfile& v, const GeneratorProfile& profile) {
  Signal s;
  Rational value = v.initial ? *v.initial : draw_level(draw, v);
  s[Rational(0)] = value;
  if (v.rate <= 0.0) return s;
  Rational t(0);
  while (true) {
    t = t + quantize_time(draw.exponential(v.rate), profile.time_quantum);
    if (t > profile.duration) break;
    value = next_level(draw, v, value);
    s[t] = value;
  }
  return s;
}

Rational value_at(const Signal& s, const Rational& t) { return std::prev(s.upper_bound(t))->second; }

Rational json_rational(const nlohmann::json& j, const char* field) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_number()) return Rational::parse(j.dump());
  throw Error(std::string("profile field '") + field + "' must be a number");
}

}  // namespace

GeneratorProfile builtin_profile(const std::string& name) {
  GeneratorProfile p;
  p.name = name;
  p.duration = Rational(30);
  p.time_quantum = Rational(1, 100);
  VariableProfile speed{"speed", Rational(0), Rational(160), 0.5, false, Rational(1, 10), {}, ""};
  VariableProfile rpm{"rpm", Rational(600), Rational(6000), 0.5, false, Rational(1), {}, ""};
  VariableProfile gear{"gear", Rational(1), Rational(4), 2.0, true, Rational(1), {}, "g"};
  if (name == "at") {
  } else if (name == "at-gear3") {
    gear.initial = Rational(3);
    gear.rate = 0.0;
  } else {
    throw Error("unknown generator profile '" + name + "'");
  }
  p.variables = {speed, rpm, gear};
  return p;
}

std::vector<std::string> builtin_profile_names() { return {"at", "at-gear3"}; }

GeneratorProfile parse_profile_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("profile is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw Error("profile must be a JSON object");
  GeneratorProfile p;
  p.name = j.value("name", std::string("custom"));
  if (j.contains("duration")) p.duration = json_rational(j["duration"], "duration");
  if (j.contains("time_quantum")) p.time_quantum = json_rational(j["time_quantum"], "time_quantum");
  if (!j.contains("variables") || !j["variables"].is_array()) throw Error("profile needs a 'variables' array");
  for (const auto& jv : j["variables"]) {
    VariableProfile v;
    if (!jv.contains("name") || !jv["name"].is_string()) throw Error("profile variable needs a 'name'");
    v.name = jv["name"].get<std::string>();
    if (jv.contains("min")) v.min = json_rational(jv["min"], "min");
    if (jv.contains("max")) v.max = json_rational(jv["max"], "max");
    v.rate = jv.value("rate", 0.0);
    v.discrete = jv.value("discrete", false);
    if (jv.contains("resolution")) v.resolution = json_rational(jv["resolution"], "resolution");
    if (jv.contains("initial")) v.initial = json_rational(jv["initial"], "initial");
    v.one_hot_prefix = jv.value("one_hot_prefix", std::string());
    p.variables.push_back(std::move(v));
  }
  validate_profile(p);
  return p;
}

void validate_profile(const GeneratorProfile& p) {
  if (p.duration <= Rational(0)) throw Error("profile duration must be positive");
  if (p.time_quantum <= Rational(0)) throw Error("profile time_quantum must be positive");
  if (p.variables.empty()) throw Error("profile has no variables");
  std::set<std::string> names{"time"};
  for (const VariableProfile& v : p.variables) {
    auto claim = [&](const std::string& n) {
      if (!names.insert(n).second) throw Error("profile column '" + n + "' defined twice");
    };
    claim(v.name);
    if (v.min > v.max) throw Error("variable '" + v.name + "' has min > max");
    if (v.initial && (*v.initial < v.min || *v.initial > v.max))
      throw Error("variable '" + v.name + "' starts outside its range");
    if (!(v.rate >= 0.0) || !std::isfinite(v.rate)) throw Error("variable '" + v.name + "' has an invalid rate");
    if (v.discrete) {
      if (!v.min.is_integer() || !v.max.is_integer())
        throw Error("discrete variable '" + v.name + "' needs integer bounds");
      if (!v.one_hot_prefix.empty())
        for (Rational k = v.min; k <= v.max; k = k + Rational(1)) claim(v.one_hot_prefix + k.str());
    } else if (v.resolution <= Rational(0)) {
      throw Error("variable '" + v.name + "' needs a positive resolution");
    }
  }
}

std::vector<TimedTrace> generate_synthetic_traces(const GeneratorProfile& profile, std::size_t count,
                                                  std::uint64_t seed) {
  validate_profile(profile);
  std::vector<TimedTrace> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    Draw draw(seed * 0x9E3779B97F4A7C15ULL + i);
    std::vector<Signal> signals;
    std::set<Rational> change_times;
    for (const VariableProfile& v : profile.variables) {
      signals.push_back(generate_signal(draw, v, profile));
      for (const auto& [t, value] : signals.back()) change_times.insert(t);
    }
    std::vector<Rational> times(change_times.begin(), change_times.end());
    std::map<std::string, std::vector<Rational>> columns;
    for (std::size_t k = 0; k < profile.variables.size(); ++k) {
      const VariableProfile& v = profile.variables[k];
      auto& column = columns[v.name];
      for (const Rational& t : times) column.push_back(value_at(signals[k], t));
      if (v.discrete && !v.one_hot_prefix.empty()) {
        for (Rational level = v.min; level <= v.max; level = level + Rational(1)) {
          auto& flag = columns[v.one_hot_prefix + level.str()];
          for (const Rational& value : column) flag.push_back(Rational(value == level ? 1 : 0));
        }
      }
    }
    std::string id = profile.name + "-" + std::to_string(seed) + "-" + std::to_string(i);
    out.emplace_back(std::move(id), profile.duration, std::move(times), std::move(columns));
  }
  return out;
}

}  // namespace mitl
