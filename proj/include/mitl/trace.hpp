#pragma once

#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "mitl/rational.hpp"

namespace mitl {

/// Finite piecewise-constant timed trace over [0, duration].
///
/// Column values hold from their timestamp up to (excluding) the next one;
/// the last row holds until `duration`. Boolean atoms are columns whose
/// values are 0 or 1 (any nonzero value reads as true).
class TimedTrace {
 public:
  TimedTrace() = default;
  /// Validates: times start at 0, strictly increase and do not exceed
  /// `duration`; every column has one value per timestamp.
  TimedTrace(std::string id, Rational duration, std::vector<Rational> times,
             std::map<std::string, std::vector<Rational>> columns);

  [[nodiscard]] const std::string& id() const { return id_; }
  [[nodiscard]] const Rational& duration() const { return duration_; }
  [[nodiscard]] const std::vector<Rational>& times() const { return times_; }
  [[nodiscard]] const std::map<std::string, std::vector<Rational>>& columns() const { return columns_; }
  [[nodiscard]] bool has_column(const std::string& name) const { return columns_.count(name) != 0; }
  /// Throws mitl::Error for an unknown column.
  [[nodiscard]] const std::vector<Rational>& column(const std::string& name) const;
  [[nodiscard]] std::size_t size() const { return times_.size(); }

  /// Value of `name` at time t (greatest timestamp <= t).
  [[nodiscard]] Rational value_at(const std::string& name, const Rational& t) const;

  [[nodiscard]] TimedTrace with_id(std::string id) const;

  friend bool operator==(const TimedTrace&, const TimedTrace&) = default;

 private:
  std::string id_;
  Rational duration_;
  std::vector<Rational> times_;
  std::map<std::string, std::vector<Rational>> columns_;
};

/// Reads "time,var1,var2,..." CSV. Duration defaults to the last timestamp.
TimedTrace read_trace_csv(std::istream& in, std::string id, std::optional<Rational> duration = std::nullopt);
TimedTrace read_trace_file(const std::string& path, std::optional<Rational> duration = std::nullopt);
void write_trace_csv(std::ostream& out, const TimedTrace& trace);

}  // namespace mitl
