#include <gtest/gtest.h>

#include <random>

#include "mitl/interval.hpp"
#include "mitl/interval_set.hpp"

using mitl::Bound;
using mitl::Interval;
using mitl::IntervalSet;
using mitl::Rational;
using mitl::Span;

namespace {

Span span(int a, bool ac, int b, bool bc) { return {Bound::at(Rational(a), ac), Bound::at(Rational(b), bc)}; }

}  // namespace

TEST(Interval, PrintsWithBrackets) {
  EXPECT_EQ((Interval{Rational(0), Rational(1, 25), false, true}).str(), "(0,0.04]");
  EXPECT_EQ(Interval::closed(Rational(0), Rational(30)).str(), "[0,30]");
}

TEST(Interval, AdditionOpensWhenEitherEndIsOpen) {
  Interval a{Rational(1), Rational(2), true, true};
  Interval b{Rational(0), Rational(1, 25), false, true};
  Interval s = mitl::interval_add(a, b);
  EXPECT_EQ(s, (Interval{Rational(1), Rational(51, 25), false, true}));
}

TEST(Interval, OperatorIntervalsRejectBadBounds) {
  EXPECT_ANY_THROW(mitl::validate_operator_interval(Interval::closed(Rational(2), Rational(1))));
  EXPECT_ANY_THROW(mitl::validate_operator_interval(Interval::closed(Rational(-1), Rational(1))));
  EXPECT_ANY_THROW(mitl::validate_operator_interval(Interval::point(Rational(1))));
  EXPECT_NO_THROW(mitl::validate_operator_interval(Interval::closed(Rational(0), Rational(1))));
}

TEST(IntervalSet, CoalescesTouchingSpans) {
  auto s = IntervalSet::from_spans({span(2, true, 3, true), span(0, true, 1, false), span(1, true, 2, false)});
  EXPECT_EQ(s.str(), "[0,3]");
  auto gap = IntervalSet::from_spans({span(0, true, 1, false), span(1, false, 2, true)});
  EXPECT_EQ(gap.spans().size(), 2u);
  EXPECT_FALSE(gap.contains(Rational(1)));
}

TEST(IntervalSet, ComplementOfRealLineIsEmpty) {
  EXPECT_TRUE(IntervalSet::real_line().complement().empty());
  EXPECT_EQ(IntervalSet().complement(), IntervalSet::real_line());
}

TEST(IntervalSet, ReachBackShiftsByWindow) {
  // times t with (t + [1,2]) meeting [5,6) are [3,5)
  auto s = IntervalSet::from_spans({span(5, true, 6, false)});
  auto r = s.reach_back(Interval::closed(Rational(1), Rational(2)));
  EXPECT_EQ(r.str(), "[3,5)");
  auto open = s.reach_back(Interval{Rational(0), Rational(1, 25), false, true});
  EXPECT_EQ(open.str(), "[4.96,6)");
}

// Set operations agree with pointwise membership on a dense sample grid.
TEST(IntervalSet, OperationsMatchMembershipOnSamples) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> end(0, 12);
  std::bernoulli_distribution coin(0.5);
  auto random_set = [&] {
    std::vector<Span> spans;
    for (int k = 0; k < 3; ++k) {
      int a = end(rng), b = end(rng);
      if (a > b) std::swap(a, b);
      spans.push_back(span(a, coin(rng), b, coin(rng)));
    }
    return IntervalSet::from_spans(spans);
  };
  for (int trial = 0; trial < 300; ++trial) {
    IntervalSet a = random_set(), b = random_set();
    IntervalSet u = a.unite(b), i = a.intersect(b), m = a.minus(b), c = a.complement();
    for (int q = -4; q <= 56; ++q) {
      Rational t(q, 4);
      bool in_a = a.contains(t), in_b = b.contains(t);
      ASSERT_EQ(u.contains(t), in_a || in_b);
      ASSERT_EQ(i.contains(t), in_a && in_b);
      ASSERT_EQ(m.contains(t), in_a && !in_b);
      ASSERT_EQ(c.contains(t), !in_a);
    }
    ASSERT_EQ(a.subset_of(u), true);
    ASSERT_EQ(i.subset_of(a), true);
  }
}

TEST(IntervalSet, ReachBackMatchesMembershipOnSamples) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> end(0, 12);
  std::bernoulli_distribution coin(0.5);
  for (int trial = 0; trial < 300; ++trial) {
    int a = end(rng), b = end(rng);
    if (a > b) std::swap(a, b);
    IntervalSet s = IntervalSet::from_spans({span(a, coin(rng), b, coin(rng))});
    int l = end(rng) % 4, u = l + 1 + end(rng) % 3;
    Interval w{Rational(l), Rational(u), coin(rng), coin(rng)};
    IntervalSet r = s.reach_back(w);
    for (int q = -32; q <= 56; ++q) {
      Rational t(q, 4);
      bool expect = false;
      for (int k = 0; k <= 4 * (u - l) && !expect; ++k) {
        Rational d = Rational(l) + Rational(k, 4);
        if (w.contains(d) && s.contains(t + d)) expect = true;
      }
      // Quarter sampling can miss a window that only touches an open end,
      // so only check one direction there.
      if (expect) ASSERT_TRUE(r.contains(t)) << s.str() << " " << w.str() << " t=" << t.str();
    }
  }
}
