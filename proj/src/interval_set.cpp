#include "mitl/interval_set.hpp"

#include <algorithm>

namespace mitl {
namespace {

// Orders lower bounds: -inf first, then by value, closed before open.
bool lower_before(const Bound& a, const Bound& b) {
  if (a.infinite || b.infinite) return a.infinite && !b.infinite;
  if (a.value != b.value) return a.value < b.value;
  return a.closed && !b.closed;
}

// Orders upper bounds: +inf last, then by value, open before closed.
bool upper_before(const Bound& a, const Bound& b) {
  if (a.infinite || b.infinite) return b.infinite && !a.infinite;
  if (a.value != b.value) return a.value < b.value;
  return !a.closed && b.closed;
}

// `later` starts no earlier than `earlier`; true when they can be merged.
bool joins(const Span& earlier, const Span& later) {
  if (earlier.upper.infinite || later.lower.infinite) return true;
  if (later.lower.value < earlier.upper.value) return true;
  return later.lower.value == earlier.upper.value && (earlier.upper.closed || later.lower.closed);
}

}  // namespace

bool Span::empty() const {
  if (lower.infinite || upper.infinite) return false;
  if (lower.value < upper.value) return false;
  return !(lower.value == upper.value && lower.closed && upper.closed);
}

bool Span::contains(const Rational& t) const {
  bool above = lower.infinite || (lower.closed ? t >= lower.value : t > lower.value);
  bool below = upper.infinite || (upper.closed ? t <= upper.value : t < upper.value);
  return above && below;
}

std::string Span::str() const {
  std::string lo = lower.infinite ? "(-inf" : std::string(lower.closed ? "[" : "(") + lower.value.str();
  std::string hi = upper.infinite ? "inf)" : upper.value.str() + (upper.closed ? "]" : ")");
  return lo + "," + hi;
}

IntervalSet IntervalSet::from_spans(std::vector<Span> spans) {
  std::erase_if(spans, [](const Span& s) { return s.empty(); });
  if (!std::is_sorted(spans.begin(), spans.end(),
                      [](const Span& a, const Span& b) { return lower_before(a.lower, b.lower); })) {
    std::stable_sort(spans.begin(), spans.end(),
                     [](const Span& a, const Span& b) { return lower_before(a.lower, b.lower); });
  }
  IntervalSet out;
  for (const Span& s : spans) {
    if (!out.spans_.empty() && joins(out.spans_.back(), s)) {
      Span& last = out.spans_.back();
      if (upper_before(last.upper, s.upper)) last.upper = s.upper;
    } else {
      out.spans_.push_back(s);
    }
  }
  return out;
}

IntervalSet IntervalSet::of(const Interval& i) {
  return from_spans({Span{Bound::at(i.lower, i.lower_closed), Bound::at(i.upper, i.upper_closed)}});
}

IntervalSet IntervalSet::real_line() { return from_spans({Span{Bound::unbounded(), Bound::unbounded()}}); }

bool IntervalSet::contains(const Rational& t) const {
  // First span whose upper bound is not below t.
  auto it = std::partition_point(spans_.begin(), spans_.end(), [&](const Span& s) {
    return !s.upper.infinite && (s.upper.value < t || (s.upper.value == t && !s.upper.closed));
  });
  return it != spans_.end() && it->contains(t);
}

IntervalSet IntervalSet::complement() const {
  std::vector<Span> gaps;
  Bound from = Bound::unbounded();
  for (const Span& s : spans_) {
    if (!s.lower.infinite) gaps.push_back(Span{from, Bound::at(s.lower.value, !s.lower.closed)});
    if (s.upper.infinite) return from_spans(std::move(gaps));
    from = Bound::at(s.upper.value, !s.upper.closed);
  }
  gaps.push_back(Span{from, Bound::unbounded()});
  return from_spans(std::move(gaps));
}

IntervalSet IntervalSet::unite(const IntervalSet& other) const {
  std::vector<Span> all;
  all.reserve(spans_.size() + other.spans_.size());
  std::merge(spans_.begin(), spans_.end(), other.spans_.begin(), other.spans_.end(), std::back_inserter(all),
             [](const Span& a, const Span& b) { return lower_before(a.lower, b.lower); });
  return from_spans(std::move(all));
}

IntervalSet IntervalSet::intersect(const IntervalSet& other) const {
  return complement().unite(other.complement()).complement();
}

IntervalSet IntervalSet::minus(const IntervalSet& other) const { return intersect(other.complement()); }

IntervalSet IntervalSet::reach_back(const Interval& window) const {
  std::vector<Span> out;
  out.reserve(spans_.size());
  for (const Span& s : spans_) {
    Span shifted = s;
    if (!s.lower.infinite) shifted.lower = Bound::at(s.lower.value - window.upper, s.lower.closed && window.upper_closed);
    if (!s.upper.infinite) shifted.upper = Bound::at(s.upper.value - window.lower, s.upper.closed && window.lower_closed);
    out.push_back(shifted);
  }
  return from_spans(std::move(out));
}

std::string IntervalSet::str() const {
  if (spans_.empty()) return "{}";
  std::string out;
  for (const Span& s : spans_) {
    if (!out.empty()) out += " u ";
    out += s.str();
  }
  return out;
}

}  // namespace mitl
