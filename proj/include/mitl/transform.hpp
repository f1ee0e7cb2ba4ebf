#pragma once

#include <set>
#include <string>
#include <vector>

#include "mitl/formula.hpp"

namespace mitl {

enum class Polarity { Positive, Negative };

/// Position of one literal leaf in a formula: the child indices leading from
/// the root to the Atom/Predicate node, or to the Not above it for a
/// negative literal.
struct LiteralOccurrence {
  std::vector<std::size_t> path;
  Polarity polarity = Polarity::Positive;
  std::string atom;  ///< atom name or predicate text

  /// "!p3" or "p3"
  [[nodiscard]] std::string literal() const { return (polarity == Polarity::Negative ? "!" : "") + atom; }
  /// "0.1.0"; the root is "".
  [[nodiscard]] std::string path_string() const;

  friend bool operator==(const LiteralOccurrence&, const LiteralOccurrence&) = default;
};

/// Negation pushed onto atoms and implications rewritten as disjunctions.
Formula to_nnf(const Formula& f);
/// to_nnf(!f)
Formula negate(const Formula& f);
[[nodiscard]] bool is_nnf(const Formula& f);

/// Literal leaves in depth-first, left-to-right order. Requires NNF.
std::vector<LiteralOccurrence> lit_occurrences(const Formula& f);

/// Subformula reached by following `path` from the root.
const Formula& subformula_at(const Formula& f, const std::vector<std::size_t>& path);
/// Copy of `f` with the node at `path` replaced; nothing is simplified.
Formula replace_at(const Formula& f, const std::vector<std::size_t>& path, const Formula& replacement);
/// f[l <- replacement] for replacement true or false. Requires NNF and a
/// path that resolves to a literal.
Formula substitute_occurrence(const Formula& f, const LiteralOccurrence& l, bool replacement);

/// Copy of `f` where every node carries its effective interval: the root
/// gets [0,0], Boolean operators pass their interval down unchanged and
/// temporal operators pass down their interval plus the operator interval.
Formula annotate_effective_intervals(const Formula& f);

/// Largest time the formula can observe when evaluated at time 0.
Rational horizon(const Formula& f);

/// Names of atoms mentioned by `f`, sorted.
std::set<std::string> atoms_of(const Formula& f);
/// Distinct predicates mentioned by `f`, in first-occurrence order.
std::vector<PredicateExpr> predicates_of(const Formula& f);

[[nodiscard]] bool contains_kind(const Formula& f, NodeKind kind);

/// Operands of the maximal chain of And nodes rooted at `f` (just `f` when it
/// is not a conjunction), left to right.
std::vector<Formula> flatten_conjunction(const Formula& f);

}  // namespace mitl
