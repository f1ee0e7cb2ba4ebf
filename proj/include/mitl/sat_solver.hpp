#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace mitl {

struct Literal {
  std::uint32_t code = 0;

  static Literal of(int var, bool negated = false) {
    return Literal{static_cast<std::uint32_t>(var) * 2 + (negated ? 1U : 0U)};
  }
  [[nodiscard]] int var() const { return static_cast<int>(code >> 1); }
  [[nodiscard]] bool negated() const { return (code & 1U) != 0; }
  /// 1-based signed form used by DIMACS.
  [[nodiscard]] long dimacs() const { return negated() ? -(var() + 1L) : var() + 1L; }
  Literal operator~() const { return Literal{code ^ 1U}; }

  friend bool operator==(Literal, Literal) = default;
};

struct SolverStats {
  std::uint64_t variables = 0;
  std::uint64_t clauses = 0;
  std::uint64_t decisions = 0;
  std::uint64_t propagations = 0;
  std::uint64_t conflicts = 0;

  SolverStats& operator+=(const SolverStats& o);
};

/// Conflict-driven clause-learning propositional solver.
///
/// Two watched literals per clause, first-UIP learning with
/// non-chronological backjumping. Decisions follow variable creation order
/// (lowest unassigned index first) with saved phases, so callers control the
/// search order by the order in which they create variables. Single use:
/// solve() may be called once.
class SatSolver {
 public:
  int new_var();
  [[nodiscard]] int num_vars() const { return static_cast<int>(values_.size()); }
  [[nodiscard]] std::size_t num_clauses() const { return original_clauses_; }

  void add_clause(std::span<const Literal> lits);
  void add_clause(std::initializer_list<Literal> lits) { add_clause(std::span<const Literal>(lits.begin(), lits.size())); }

  bool solve();
  /// Model value after a successful solve().
  [[nodiscard]] bool value(int var) const { return values_[static_cast<std::size_t>(var)] == 1; }
  [[nodiscard]] SolverStats stats() const;

  /// Clauses exactly as added (after tautology/duplicate removal).
  [[nodiscard]] const std::vector<std::vector<Literal>>& problem_clauses() const { return problem_; }

 private:
  static constexpr int kNoReason = -1;

  [[nodiscard]] int lit_value(Literal l) const;  // -1 unassigned, 0 false, 1 true
  void assign(Literal l, int reason);
  int propagate();
  void analyze(int conflict, std::vector<Literal>& learnt, int& backjump_level);
  void backtrack(int level);
  int attach(std::vector<Literal> lits, bool learnt);
  [[nodiscard]] int decision_level() const { return static_cast<int>(trail_lim_.size()); }

  std::vector<std::vector<Literal>> problem_;
  std::vector<std::vector<Literal>> clauses_;
  std::vector<std::vector<int>> watches_;  // by literal code: clauses watching that literal
  std::vector<std::int8_t> values_;
  std::vector<std::int8_t> saved_phase_;
  std::vector<int> level_;
  std::vector<int> reason_;
  std::vector<Literal> trail_;
  std::vector<std::size_t> trail_lim_;
  std::vector<std::int8_t> seen_;
  std::size_t qhead_ = 0;
  std::size_t original_clauses_ = 0;
  int next_decision_ = 0;
  bool inconsistent_ = false;
  bool solved_ = false;
  SolverStats stats_;
};

}  // namespace mitl
