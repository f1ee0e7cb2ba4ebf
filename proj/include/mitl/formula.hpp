#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mitl/interval.hpp"
#include "mitl/interval_set.hpp"
#include "mitl/rational.hpp"

namespace mitl {

enum class NodeKind { True, False, Atom, Predicate, Not, And, Or, Implies, Eventually, Always };

enum class Comparison { Less, LessEqual, Greater, GreaterEqual };

/// Single-variable threshold constraint such as `speed > 100`.
struct PredicateExpr {
  std::string variable;
  Comparison comparison = Comparison::Greater;
  Rational threshold;

  /// Set of values of `variable` for which the predicate holds.
  [[nodiscard]] IntervalSet region() const;
  [[nodiscard]] bool holds(const Rational& value) const;
  /// Canonical text, e.g. "speed > 100".
  [[nodiscard]] std::string str() const;

  friend bool operator==(const PredicateExpr&, const PredicateExpr&) = default;
};

struct Node;

/// Immutable MITL/STL formula. Copies share structure; every transformation
/// builds a new tree. Equality is structural and ignores effective-interval
/// annotations.
class Formula {
 public:
  static Formula truth();
  static Formula falsity();
  static Formula atom(std::string name);
  static Formula predicate(PredicateExpr expr);
  static Formula negation(Formula child);
  static Formula conjunction(Formula left, Formula right);
  static Formula disjunction(Formula left, Formula right);
  static Formula implication(Formula antecedent, Formula consequent);
  static Formula eventually(Interval interval, Formula child);
  static Formula always(Interval interval, Formula child);

  /// Left-nested conjunction of `parts`; true for an empty list.
  static Formula conjunction_of(const std::vector<Formula>& parts);
  static Formula disjunction_of(const std::vector<Formula>& parts);

  [[nodiscard]] NodeKind kind() const;
  [[nodiscard]] const std::string& name() const;
  [[nodiscard]] const PredicateExpr& predicate_expr() const;
  [[nodiscard]] const Interval& interval() const;
  [[nodiscard]] const std::vector<Formula>& children() const;
  [[nodiscard]] const Formula& child(std::size_t i) const { return children().at(i); }
  [[nodiscard]] const std::optional<Interval>& effective_interval() const;

  [[nodiscard]] bool is_temporal() const { return kind() == NodeKind::Eventually || kind() == NodeKind::Always; }
  [[nodiscard]] bool is_binary() const {
    return kind() == NodeKind::And || kind() == NodeKind::Or || kind() == NodeKind::Implies;
  }
  [[nodiscard]] bool is_constant() const { return kind() == NodeKind::True || kind() == NodeKind::False; }
  /// Atom, predicate, or the negation of one.
  [[nodiscard]] bool is_literal() const;

  /// Same node with new children (annotation dropped).
  [[nodiscard]] Formula with_children(std::vector<Formula> children) const;
  /// Same node and children with the given effective interval.
  [[nodiscard]] Formula annotated(Interval effective) const;

  /// Fully parenthesized text in the input grammar.
  [[nodiscard]] std::string str() const;
  /// Node count.
  [[nodiscard]] std::size_t size() const;
  /// Address of the shared node; stable for the lifetime of any copy.
  [[nodiscard]] const void* identity() const { return node_.get(); }

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct Node {
  NodeKind kind = NodeKind::True;
  std::string name;
  PredicateExpr predicate;
  Interval interval;
  std::vector<Formula> children;
  std::optional<Interval> effective;
};

std::string to_string(Comparison c);

}  // namespace mitl
