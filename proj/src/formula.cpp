#include "mitl/formula.hpp"

#include <stdexcept>

namespace mitl {
namespace {

std::shared_ptr<Node> make(NodeKind kind) {
  auto n = std::make_shared<Node>();
  n->kind = kind;
  return n;
}

}  // namespace

std::string to_string(Comparison c) {
  switch (c) {
    case Comparison::Less: return "<";
    case Comparison::LessEqual: return "<=";
    case Comparison::Greater: return ">";
    case Comparison::GreaterEqual: return ">=";
  }
  return "?";
}

IntervalSet PredicateExpr::region() const {
  switch (comparison) {
    case Comparison::Less: return IntervalSet::from_spans({Span{Bound::unbounded(), Bound::at(threshold, false)}});
    case Comparison::LessEqual: return IntervalSet::from_spans({Span{Bound::unbounded(), Bound::at(threshold, true)}});
    case Comparison::Greater: return IntervalSet::from_spans({Span{Bound::at(threshold, false), Bound::unbounded()}});
    case Comparison::GreaterEqual:
      return IntervalSet::from_spans({Span{Bound::at(threshold, true), Bound::unbounded()}});
  }
  return {};
}

bool PredicateExpr::holds(const Rational& value) const {
  switch (comparison) {
    case Comparison::Less: return value < threshold;
    case Comparison::LessEqual: return value <= threshold;
    case Comparison::Greater: return value > threshold;
    case Comparison::GreaterEqual: return value >= threshold;
  }
  return false;
}

std::string PredicateExpr::str() const { return variable + " " + to_string(comparison) + " " + threshold.str(); }

Formula Formula::truth() {
  static const Formula t(make(NodeKind::True));
  return t;
}

Formula Formula::falsity() {
  static const Formula f(make(NodeKind::False));
  return f;
}

Formula Formula::atom(std::string name) {
  auto n = make(NodeKind::Atom);
  n->name = std::move(name);
  return Formula(std::move(n));
}

Formula Formula::predicate(PredicateExpr expr) {
  auto n = make(NodeKind::Predicate);
  n->predicate = std::move(expr);
  return Formula(std::move(n));
}

Formula Formula::negation(Formula child) {
  auto n = make(NodeKind::Not);
  n->children = {std::move(child)};
  return Formula(std::move(n));
}

Formula Formula::conjunction(Formula left, Formula right) {
  auto n = make(NodeKind::And);
  n->children = {std::move(left), std::move(right)};
  return Formula(std::move(n));
}

Formula Formula::disjunction(Formula left, Formula right) {
  auto n = make(NodeKind::Or);
  n->children = {std::move(left), std::move(right)};
  return Formula(std::move(n));
}

Formula Formula::implication(Formula antecedent, Formula consequent) {
  auto n = make(NodeKind::Implies);
  n->children = {std::move(antecedent), std::move(consequent)};
  return Formula(std::move(n));
}

Formula Formula::eventually(Interval interval, Formula child) {
  auto n = make(NodeKind::Eventually);
  n->interval = interval;
  n->children = {std::move(child)};
  return Formula(std::move(n));
}

Formula Formula::always(Interval interval, Formula child) {
  auto n = make(NodeKind::Always);
  n->interval = interval;
  n->children = {std::move(child)};
  return Formula(std::move(n));
}

Formula Formula::conjunction_of(const std::vector<Formula>& parts) {
  if (parts.empty()) return truth();
  Formula acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) acc = conjunction(acc, parts[i]);
  return acc;
}

Formula Formula::disjunction_of(const std::vector<Formula>& parts) {
  if (parts.empty()) return falsity();
  Formula acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) acc = disjunction(acc, parts[i]);
  return acc;
}

NodeKind Formula::kind() const { return node_->kind; }
const std::string& Formula::name() const { return node_->name; }
const PredicateExpr& Formula::predicate_expr() const { return node_->predicate; }
const Interval& Formula::interval() const { return node_->interval; }
const std::vector<Formula>& Formula::children() const { return node_->children; }
const std::optional<Interval>& Formula::effective_interval() const { return node_->effective; }

bool Formula::is_literal() const {
  if (kind() == NodeKind::Atom || kind() == NodeKind::Predicate) return true;
  return kind() == NodeKind::Not &&
         (child(0).kind() == NodeKind::Atom || child(0).kind() == NodeKind::Predicate);
}

Formula Formula::with_children(std::vector<Formula> children) const {
  if (children.size() != node_->children.size()) throw std::logic_error("arity mismatch in with_children");
  auto n = std::make_shared<Node>(*node_);
  n->children = std::move(children);
  n->effective.reset();
  return Formula(std::move(n));
}

Formula Formula::annotated(Interval effective) const {
  auto n = std::make_shared<Node>(*node_);
  n->effective = effective;
  return Formula(std::move(n));
}

std::string Formula::str() const {
  switch (kind()) {
    case NodeKind::True: return "true";
    case NodeKind::False: return "false";
    case NodeKind::Atom: return name();
    case NodeKind::Predicate: return "(" + predicate_expr().str() + ")";
    case NodeKind::Not: return "!" + child(0).str();
    case NodeKind::And: return "(" + child(0).str() + " && " + child(1).str() + ")";
    case NodeKind::Or: return "(" + child(0).str() + " || " + child(1).str() + ")";
    case NodeKind::Implies: return "(" + child(0).str() + " -> " + child(1).str() + ")";
    case NodeKind::Eventually: return "F" + interval().str() + " " + child(0).str();
    case NodeKind::Always: return "G" + interval().str() + " " + child(0).str();
  }
  return "?";
}

std::size_t Formula::size() const {
  std::size_t n = 1;
  for (const Formula& c : children()) n += c.size();
  return n;
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  const Node& x = *a.node_;
  const Node& y = *b.node_;
  if (x.kind != y.kind) return false;
  switch (x.kind) {
    case NodeKind::Atom: return x.name == y.name;
    case NodeKind::Predicate: return x.predicate == y.predicate;
    case NodeKind::Eventually:
    case NodeKind::Always:
      if (x.interval != y.interval) return false;
      break;
    default: break;
  }
  return x.children == y.children;
}

}  // namespace mitl
