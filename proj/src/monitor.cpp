#include "mitl/monitor.hpp"

#include "mitl/error.hpp"

namespace mitl {
namespace {

template <typename Holds>
IntervalSet segments_where(const TimedTrace& trace, const std::vector<Rational>& values, Holds holds) {
  const auto& times = trace.times();
  std::vector<Span> spans;
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (!holds(values[i])) continue;
    bool last = i + 1 == times.size();
    Bound end = last ? Bound::at(trace.duration(), true) : Bound::at(times[i + 1], false);
    spans.push_back(Span{Bound::at(times[i], true), end});
  }
  return IntervalSet::from_spans(std::move(spans));
}

class SetEvaluator {
 public:
  explicit SetEvaluator(const TimedTrace& trace)
      : trace_(trace), domain_(IntervalSet::of(Interval::closed(Rational(0), trace.duration()))) {}

  IntervalSet eval(const Formula& f) const {
    switch (f.kind()) {
      case NodeKind::True: return domain_;
      case NodeKind::False: return {};
      case NodeKind::Atom:
        return segments_where(trace_, trace_.column(f.name()), [](const Rational& v) { return v != Rational(0); });
      case NodeKind::Predicate: {
        const PredicateExpr& p = f.predicate_expr();
        return segments_where(trace_, trace_.column(p.variable), [&p](const Rational& v) { return p.holds(v); });
      }
      case NodeKind::Not: return domain_.minus(eval(f.child(0)));
      case NodeKind::And: return eval(f.child(0)).intersect(eval(f.child(1)));
      case NodeKind::Or: return eval(f.child(0)).unite(eval(f.child(1)));
      case NodeKind::Implies: return domain_.minus(eval(f.child(0))).unite(eval(f.child(1)));
      case NodeKind::Eventually: return eval(f.child(0)).reach_back(f.interval()).intersect(domain_);
      case NodeKind::Always: {
        IntervalSet violations = domain_.minus(eval(f.child(0)));
        return domain_.minus(violations.reach_back(f.interval()));
      }
    }
    return {};
  }

 private:
  const TimedTrace& trace_;
  IntervalSet domain_;
};

}  // namespace

IntervalSet satisfaction_set(const TimedTrace& trace, const Formula& f) { return SetEvaluator(trace).eval(f); }

bool evaluate(const TimedTrace& trace, const Formula& f, const Rational& t0) {
  if (t0 < Rational(0) || t0 > trace.duration())
    throw Error("evaluation time " + t0.str() + " outside [0," + trace.duration().str() + "]");
  return satisfaction_set(trace, f).contains(t0);
}

TimedTrace abstract_trace(const TimedTrace& signals, const AtomTable& table) {
  std::map<std::string, std::vector<Rational>> columns;
  for (const PredicateAtom& atom : table.atoms()) {
    const auto& values = signals.column(atom.variable);
    std::vector<Rational>& out = columns[atom.name];
    out.reserve(values.size());
    for (const Rational& v : values) out.push_back(Rational(atom.region.contains(v) ? 1 : 0));
  }
  return TimedTrace(signals.id(), signals.duration(), signals.times(), std::move(columns));
}

}  // namespace mitl
