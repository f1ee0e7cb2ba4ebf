#include "mitl/interval.hpp"

#include "mitl/error.hpp"

namespace mitl {

bool Interval::contains(const Rational& t) const {
  bool above = lower_closed ? t >= lower : t > lower;
  bool below = upper_closed ? t <= upper : t < upper;
  return above && below;
}

std::string Interval::str() const {
  return std::string(lower_closed ? "[" : "(") + lower.str() + "," + upper.str() + (upper_closed ? "]" : ")");
}

void validate_interval(const Interval& i) {
  if (i.lower < Rational(0)) throw Error("malformed interval " + i.str() + ": negative bound");
  if (i.lower > i.upper) throw Error("malformed interval " + i.str() + ": lower bound exceeds upper bound");
  if (i.singular() && !i.is_closed()) throw Error("malformed interval " + i.str() + ": empty");
}

void validate_operator_interval(const Interval& i) {
  validate_interval(i);
  if (i.singular()) throw Error("malformed interval " + i.str() + ": singular interval on temporal operator");
}

Interval interval_add(const Interval& a, const Interval& b) {
  return Interval{a.lower + b.lower, a.upper + b.upper, a.lower_closed && b.lower_closed,
                  a.upper_closed && b.upper_closed};
}

}  // namespace mitl
