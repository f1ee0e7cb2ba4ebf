#pragma once

#include <string>

#include "mitl/rational.hpp"

namespace mitl {

/// Bounded time interval with independent open/closed endpoint flags.
///
/// Used both for the interval attached to a temporal operator and for the
/// effective interval annotated on a formula node. Operator intervals must be
/// nonsingular; effective intervals may collapse to a point such as [0,0].
struct Interval {
  Rational lower;
  Rational upper;
  bool lower_closed = true;
  bool upper_closed = true;

  static Interval closed(Rational lo, Rational hi) { return Interval{lo, hi, true, true}; }
  static Interval point(Rational t) { return closed(t, t); }

  [[nodiscard]] bool singular() const { return lower == upper; }
  [[nodiscard]] bool is_closed() const { return lower_closed && upper_closed; }
  [[nodiscard]] bool contains(const Rational& t) const;
  /// "[0,30]", "(0,0.04]"
  [[nodiscard]] std::string str() const;

  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Throws mitl::Error unless 0 <= lower <= upper and the interval is not empty.
void validate_interval(const Interval& i);

/// Additionally requires lower < upper, as temporal operators demand.
void validate_operator_interval(const Interval& i);

/// Component-wise endpoint sum. An endpoint of the result is open when the
/// matching endpoint of either operand is open.
Interval interval_add(const Interval& a, const Interval& b);

}  // namespace mitl
