#pragma once

#include "mitl/formula.hpp"
#include "mitl/interval_set.hpp"
#include "mitl/predicates.hpp"
#include "mitl/trace.hpp"

namespace mitl {

/// Exact set of times in [0, duration] at which `f` holds on `trace`.
///
/// Computed bottom-up over satisfaction sets: a leaf is the union of the
/// trace segments where it holds, Boolean operators are set operations, and
/// F_I g holds at t iff (t + I) ∩ [0, T] meets the set of g. G_I is the dual,
/// so it holds over an empty window. Implications are evaluated classically.
/// Cost is linear in trace length per formula node.
IntervalSet satisfaction_set(const TimedTrace& trace, const Formula& f);

/// (trace, t0) |= f. Throws mitl::Error for t0 outside [0, duration] or a
/// signal the trace does not carry.
bool evaluate(const TimedTrace& trace, const Formula& f, const Rational& t0 = Rational(0));

/// Boolean trace over the table's atoms: an atom holds at t iff its
/// variable's value at t lies in the atom's region.
TimedTrace abstract_trace(const TimedTrace& signals, const AtomTable& table);

}  // namespace mitl
