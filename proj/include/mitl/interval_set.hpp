#pragma once

#include <string>
#include <vector>

#include "mitl/interval.hpp"
#include "mitl/rational.hpp"

namespace mitl {

/// One end of a span on the real line. An infinite lower bound is -inf, an
/// infinite upper bound is +inf; `value` and `closed` are ignored then.
struct Bound {
  Rational value;
  bool closed = true;
  bool infinite = false;

  static Bound at(Rational v, bool closed) { return Bound{v, closed, false}; }
  static Bound unbounded() { return Bound{Rational(0), false, true}; }

  friend bool operator==(const Bound&, const Bound&) = default;
};

struct Span {
  Bound lower;
  Bound upper;

  [[nodiscard]] bool empty() const;
  [[nodiscard]] bool contains(const Rational& t) const;
  [[nodiscard]] std::string str() const;

  friend bool operator==(const Span&, const Span&) = default;
};

/// Finite union of real intervals, stored as sorted, pairwise disjoint and
/// non-adjacent spans. This is both the region of a predicate over one
/// variable and the satisfaction set of a formula over a trace's time domain.
class IntervalSet {
 public:
  IntervalSet() = default;

  static IntervalSet from_spans(std::vector<Span> spans);
  static IntervalSet of(const Interval& i);
  static IntervalSet real_line();

  [[nodiscard]] const std::vector<Span>& spans() const { return spans_; }
  [[nodiscard]] bool empty() const { return spans_.empty(); }
  [[nodiscard]] bool contains(const Rational& t) const;

  [[nodiscard]] IntervalSet complement() const;
  [[nodiscard]] IntervalSet unite(const IntervalSet& other) const;
  [[nodiscard]] IntervalSet intersect(const IntervalSet& other) const;
  [[nodiscard]] IntervalSet minus(const IntervalSet& other) const;
  [[nodiscard]] bool overlaps(const IntervalSet& other) const { return !intersect(other).empty(); }
  [[nodiscard]] bool subset_of(const IntervalSet& other) const { return minus(other).empty(); }

  /// {t | (t + window) meets this set}: the times from which some point of
  /// the set is reachable through `window`.
  [[nodiscard]] IntervalSet reach_back(const Interval& window) const;

  [[nodiscard]] std::string str() const;

  friend bool operator==(const IntervalSet&, const IntervalSet&) = default;

 private:
  std::vector<Span> spans_;
};

}  // namespace mitl
