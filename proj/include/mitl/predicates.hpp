#pragma once

#include <map>
#include <string>
#include <vector>

#include "mitl/formula.hpp"
#include "mitl/interval_set.hpp"

namespace mitl {

/// Boolean abstraction of a set of values of one real variable.
struct PredicateAtom {
  std::string name;
  std::string variable;
  IntervalSet region;
};

/// Atoms over the same variable with pairwise disjoint regions: at most one
/// of them holds at any instant.
struct MutexGroup {
  std::string variable;
  std::vector<std::string> members;

  friend bool operator==(const MutexGroup&, const MutexGroup&) = default;
};

using MutexSet = std::vector<MutexGroup>;

/// Result of predicate decomposition: the mutually exclusive atoms, the
/// disjunction of atoms that replaces each original predicate, and the mutex
/// groups to hand to the satisfiability engine.
class AtomTable {
 public:
  AtomTable() = default;
  AtomTable(std::vector<PredicateAtom> atoms, std::map<std::string, std::vector<std::string>> rewrites,
            MutexSet mutex);

  [[nodiscard]] const std::vector<PredicateAtom>& atoms() const { return atoms_; }
  /// Keyed by PredicateExpr::str().
  [[nodiscard]] const std::map<std::string, std::vector<std::string>>& rewrites() const { return rewrites_; }
  [[nodiscard]] const MutexSet& mutex_groups() const { return mutex_; }
  [[nodiscard]] const PredicateAtom* find_atom(const std::string& name) const;
  [[nodiscard]] bool empty() const { return atoms_.empty(); }

 private:
  std::vector<PredicateAtom> atoms_;
  std::map<std::string, std::vector<std::string>> rewrites_;
  MutexSet mutex_;
};

/// Splits two overlapping same-variable atoms into the nonempty members of
/// {A∩B, A∖B, B∖A}. Result atoms are unnamed. Throws mitl::Error when the
/// variables differ or the regions are disjoint.
std::vector<PredicateAtom> decompose_pair(const PredicateAtom& a, const PredicateAtom& b);

/// Repeatedly decomposes overlapping pairs until every variable's regions
/// are disjoint, names the resulting cells `<variable>_<k>` in ascending
/// order of lower endpoint, and rewrites each input predicate as the
/// disjunction of the cells inside it.
AtomTable generate_mutex_predicates(const std::vector<PredicateExpr>& predicates);

/// Replaces every predicate leaf by its disjunction of atoms.
Formula abstract_formula(const Formula& f, const AtomTable& table);

}  // namespace mitl
