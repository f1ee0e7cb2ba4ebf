#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mitl/formula.hpp"
#include "mitl/trace.hpp"
#include "mitl/transform.hpp"

namespace mitl {

enum class SignalFindingKind { AntecedentFailure, MutationPass, FalsificationSource };

/// One reason a trace satisfies (or falsifies) a formula for an unintended
/// reason. `mutated` is the formula whose evaluation on the trace produced
/// the finding, so every finding can be replayed with evaluate().
struct VacuityFinding {
  SignalFindingKind kind = SignalFindingKind::AntecedentFailure;
  std::string trace_id;
  std::optional<Formula> implication;           ///< AntecedentFailure
  std::optional<Interval> effective_interval;   ///< AntecedentFailure: of the antecedent
  std::optional<LiteralOccurrence> occurrence;  ///< MutationPass, FalsificationSource
  Formula mutated = Formula::truth();
};

/// True iff `f` has at least one implication in positive polarity and each
/// such implication sits below a temporal operator or has a temporal
/// operator in its consequent.
bool classify_rr(const Formula& f);

/// For every positive-polarity implication (a -> c), outermost first, checks
/// whether the trace satisfies G_{EI(a)} !a where EI(a) is the effective
/// interval of the antecedent (just !a when that interval is [0,0]). The
/// formula is used as written, not in NNF.
std::vector<VacuityFinding> antecedent_failure_check(const Formula& f, const TimedTrace& trace);

/// For each root conjunct c of nnf(f) and each literal occurrence l of c,
/// reports l when the trace satisfies c[l <- false]. Empty when nnf(f) has
/// no disjunction. Occurrence paths are relative to nnf(f).
std::vector<VacuityFinding> literal_removal_check(const Formula& f, const TimedTrace& trace);

/// For a trace falsifying nnf(f): reports each literal occurrence l below a
/// conjunction for which nnf(f)[l <- true] holds on the trace.
/// Throws mitl::Error when the trace satisfies f.
std::vector<VacuityFinding> falsification_localize(const Formula& f, const TimedTrace& trace);

/// Operands of the root conjunction chain of `f` with their paths from the root.
std::vector<std::pair<std::vector<std::size_t>, Formula>> root_conjuncts(const Formula& f);

std::string to_string(SignalFindingKind k);

}  // namespace mitl
