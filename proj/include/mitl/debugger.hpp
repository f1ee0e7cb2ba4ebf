#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mitl/engine.hpp"
#include "mitl/formula.hpp"
#include "mitl/predicates.hpp"
#include "mitl/transform.hpp"

namespace mitl {

enum class Validity { Unsatisfiable, Tautology, Valid };
enum class DebugStatus { FailedValidity, FailedRedundancy, FailedVacuity, Passed };
enum class FindingKind { Unsatisfiable, Tautology, RedundantConjunct, VacuousOccurrence };

struct DebugConfig {
  GridConfig grid;
  /// Stop at the first finding.
  bool early_stop = false;
  /// Hand mutex groups to the engine. Off reproduces naive substitution.
  bool use_mutex = true;
  /// Extra groups over plain atoms, added to those from decomposition.
  MutexSet extra_mutex;
};

/// A conjunct entailed by the other operands of its conjunction chain.
/// Paths are relative to the analyzed NNF formula.
struct Redundancy {
  Formula conjunct;
  Formula enclosing;
  std::vector<std::size_t> conjunct_path;
  std::vector<std::size_t> enclosing_path;
};

/// A literal occurrence that can be replaced by false without changing the
/// meaning of the formula. `mutated` is the equivalent simplified formula.
struct Vacuity {
  LiteralOccurrence occurrence;
  Formula mutated;
};

struct Finding {
  FindingKind kind = FindingKind::Unsatisfiable;
  std::optional<Redundancy> redundancy;
  std::optional<Vacuity> vacuity;
};

struct StageStats {
  std::string stage;
  bool ran = false;
  std::size_t queries = 0;
  std::size_t fast_path_hits = 0;
  SolverStats solver;
  double elapsed_ms = 0.0;
};

struct DebugReport {
  std::string formula;   ///< input as parsed
  std::string analyzed;  ///< abstracted NNF formula the checks ran on
  std::vector<Finding> findings;
  std::vector<StageStats> stages;
  std::vector<std::string> diagnostics;
  DebugStatus status = DebugStatus::Passed;
  DebugConfig config;
  MutexSet mutex;  ///< groups actually handed to the engine
};

/// Counters shared by the checks below. Optional everywhere.
struct QueryLog {
  std::size_t queries = 0;
  std::size_t fast_path_hits = 0;
  SolverStats solver;
  std::vector<std::string> diagnostics;
};

Validity check_validity(const Formula& f, const MutexSet& mutex, const GridConfig& cfg, QueryLog* log = nullptr);

/// Every conjunct of every maximal conjunction chain in nnf(f) that the
/// chain's other operands entail. Of two identical operands only the later
/// one is reported. With `early_stop` the search ends at the first finding.
std::vector<Redundancy> check_redundancy(const Formula& f, const MutexSet& mutex, const GridConfig& cfg,
                                         bool early_stop = false, QueryLog* log = nullptr);

/// Literal occurrences l of the root conjuncts c of nnf(f) with
/// nnf(f) |= c[l <- false].
std::vector<Vacuity> check_vacuity(const Formula& f, const MutexSet& mutex, const GridConfig& cfg,
                                   bool early_stop = false, QueryLog* log = nullptr);

/// Abstracts predicates with `table`, then runs validity, redundancy and
/// vacuity. A validity failure ends the run; redundancy findings end it
/// when early_stop is set.
DebugReport debug_pipeline(const Formula& f, const AtomTable& table, const DebugConfig& cfg);

/// Exit status of the command-line tool: 0 for Passed, 1 otherwise.
int exit_code(const DebugReport& report);

std::string to_string(Validity v);
std::string to_string(DebugStatus s);
std::string to_string(FindingKind k);

}  // namespace mitl
