#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mitl/formula.hpp"
#include "mitl/predicates.hpp"
#include "mitl/rational.hpp"
#include "mitl/sat_solver.hpp"
#include "mitl/trace.hpp"

namespace mitl {

/// Grid on which the satisfiability engine models time.
struct GridConfig {
  Rational step{1};
  std::optional<Rational> horizon_cap;
  /// Re-solve at step/2 and record a diagnostic when the verdicts differ.
  bool refine_check = false;
  /// Let decide() try the untimed fast path before the grid engine.
  bool fast_path = true;
};

enum class SatStatus { Sat, Unsat };

struct SatVerdict {
  SatStatus status = SatStatus::Unsat;
  /// Satisfying trace, present iff status == Sat. Atoms are 0/1 columns.
  std::optional<TimedTrace> witness;
  SolverStats stats;
  std::vector<std::string> diagnostics;
  bool by_fast_path = false;

  [[nodiscard]] bool sat() const { return status == SatStatus::Sat; }
};

/// Decides satisfiability over traces that are piecewise constant with
/// change points on the grid {0, step, 2*step, ..., horizon(f)}.
///
/// `f` must be in NNF over plain atoms (abstract predicates first), every
/// interval closed with endpoints that are multiples of the step, and the
/// horizon within the cap. Violations throw mitl::Error.
SatVerdict check_sat(const Formula& f, const MutexSet& mutex, const GridConfig& cfg);

/// check_sat preceded by ltl_fast_path when cfg.fast_path is set and `f`
/// lies in a pure fragment. Verdicts are identical to check_sat's.
SatVerdict decide(const Formula& f, const MutexSet& mutex, const GridConfig& cfg);

/// lhs |= rhs, i.e. lhs && !rhs has no grid model. Inputs need not be NNF.
bool entails(const Formula& lhs, const Formula& rhs, const MutexSet& mutex, const GridConfig& cfg);

enum class Fragment { EventuallyOnly, AlwaysOnly, Mixed };

/// Which temporal operators occur in an NNF formula. A formula without
/// temporal operators is reported as AlwaysOnly.
Fragment fragment_classify(const Formula& f);

enum class FastPathResult { Sat, Unsat, Inconclusive };

/// Untimed check on the interval-free version of a pure-fragment formula.
///
/// AlwaysOnly: if the propositional formula left after erasing every G is
/// satisfiable, a constant trace satisfies `f`, so the answer is Sat.
/// EventuallyOnly: if the untimed formula has no model over (number of F + 1)
/// positions it has no model at all, and neither does `f`, so the answer is
/// Unsat. Everything else is Inconclusive. Throws on a Mixed formula.
FastPathResult ltl_fast_path(const Formula& f, const MutexSet& mutex);

/// Grid unfolding of `f` as a DIMACS CNF document. Comment lines
/// "c atom <name> t=<time> var=<k>" map atom variables to grid points.
std::string export_dimacs(const Formula& f, const MutexSet& mutex, const GridConfig& cfg);

std::string to_string(SatStatus s);
std::string to_string(Fragment f);
std::string to_string(FastPathResult r);

}  // namespace mitl
