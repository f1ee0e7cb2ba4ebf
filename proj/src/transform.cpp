#include "mitl/transform.hpp"

#include <algorithm>

#include "mitl/error.hpp"

namespace mitl {

std::string LiteralOccurrence::path_string() const {
  std::string out;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i) out += ".";
    out += std::to_string(path[i]);
  }
  return out;
}

namespace {

Formula nnf(const Formula& f, bool negated) {
  switch (f.kind()) {
    case NodeKind::True: return negated ? Formula::falsity() : f;
    case NodeKind::False: return negated ? Formula::truth() : f;
    case NodeKind::Atom:
    case NodeKind::Predicate: return negated ? Formula::negation(f) : f;
    case NodeKind::Not: return nnf(f.child(0), !negated);
    case NodeKind::And: {
      Formula l = nnf(f.child(0), negated);
      Formula r = nnf(f.child(1), negated);
      return negated ? Formula::disjunction(l, r) : Formula::conjunction(l, r);
    }
    case NodeKind::Or: {
      Formula l = nnf(f.child(0), negated);
      Formula r = nnf(f.child(1), negated);
      return negated ? Formula::conjunction(l, r) : Formula::disjunction(l, r);
    }
    case NodeKind::Implies: {
      // a -> b == !a || b;  !(a -> b) == a && !b
      Formula l = nnf(f.child(0), !negated);
      Formula r = nnf(f.child(1), negated);
      return negated ? Formula::conjunction(l, r) : Formula::disjunction(l, r);
    }
    case NodeKind::Eventually: {
      Formula body = nnf(f.child(0), negated);
      return negated ? Formula::always(f.interval(), body) : Formula::eventually(f.interval(), body);
    }
    case NodeKind::Always: {
      Formula body = nnf(f.child(0), negated);
      return negated ? Formula::eventually(f.interval(), body) : Formula::always(f.interval(), body);
    }
  }
  return f;
}

void collect_literals(const Formula& f, std::vector<std::size_t>& path, std::vector<LiteralOccurrence>& out) {
  switch (f.kind()) {
    case NodeKind::Atom: out.push_back({path, Polarity::Positive, f.name()}); return;
    case NodeKind::Predicate: out.push_back({path, Polarity::Positive, f.predicate_expr().str()}); return;
    case NodeKind::Not: {
      const Formula& c = f.child(0);
      std::string name = c.kind() == NodeKind::Atom ? c.name() : c.predicate_expr().str();
      out.push_back({path, Polarity::Negative, name});
      return;
    }
    default: break;
  }
  for (std::size_t i = 0; i < f.children().size(); ++i) {
    path.push_back(i);
    collect_literals(f.child(i), path, out);
    path.pop_back();
  }
}

Formula annotate(const Formula& f, const Interval& ei) {
  std::vector<Formula> kids;
  kids.reserve(f.children().size());
  Interval down = f.is_temporal() ? interval_add(ei, f.interval()) : ei;
  for (const Formula& c : f.children()) kids.push_back(annotate(c, down));
  Formula base = kids.empty() ? f : f.with_children(std::move(kids));
  return base.annotated(ei);
}

void collect_atoms(const Formula& f, std::set<std::string>& out) {
  if (f.kind() == NodeKind::Atom) out.insert(f.name());
  for (const Formula& c : f.children()) collect_atoms(c, out);
}

void collect_predicates(const Formula& f, std::vector<PredicateExpr>& out) {
  if (f.kind() == NodeKind::Predicate && std::find(out.begin(), out.end(), f.predicate_expr()) == out.end())
    out.push_back(f.predicate_expr());
  for (const Formula& c : f.children()) collect_predicates(c, out);
}

Formula replace_rec(const Formula& f, const std::vector<std::size_t>& path, std::size_t depth,
                    const Formula& replacement) {
  if (depth == path.size()) return replacement;
  if (path[depth] >= f.children().size()) throw Error("occurrence path does not resolve in formula");
  std::vector<Formula> kids = f.children();
  kids[path[depth]] = replace_rec(kids[path[depth]], path, depth + 1, replacement);
  return f.with_children(std::move(kids));
}

}  // namespace

Formula to_nnf(const Formula& f) { return nnf(f, false); }

Formula negate(const Formula& f) { return nnf(f, true); }

bool is_nnf(const Formula& f) {
  switch (f.kind()) {
    case NodeKind::Implies: return false;
    case NodeKind::Not: return f.is_literal();
    default: break;
  }
  return std::all_of(f.children().begin(), f.children().end(), [](const Formula& c) { return is_nnf(c); });
}

std::vector<LiteralOccurrence> lit_occurrences(const Formula& f) {
  if (!is_nnf(f)) throw Error("literal occurrences require a formula in negation normal form");
  std::vector<LiteralOccurrence> out;
  std::vector<std::size_t> path;
  collect_literals(f, path, out);
  return out;
}

const Formula& subformula_at(const Formula& f, const std::vector<std::size_t>& path) {
  const Formula* cur = &f;
  for (std::size_t idx : path) {
    if (idx >= cur->children().size()) throw Error("occurrence path does not resolve in formula");
    cur = &cur->child(idx);
  }
  return *cur;
}

Formula replace_at(const Formula& f, const std::vector<std::size_t>& path, const Formula& replacement) {
  return replace_rec(f, path, 0, replacement);
}

Formula substitute_occurrence(const Formula& f, const LiteralOccurrence& l, bool replacement) {
  if (!is_nnf(f)) throw Error("substitution requires a formula in negation normal form");
  const Formula& target = subformula_at(f, l.path);
  if (!target.is_literal()) throw Error("occurrence path does not resolve to a literal");
  return replace_at(f, l.path, replacement ? Formula::truth() : Formula::falsity());
}

Formula annotate_effective_intervals(const Formula& f) { return annotate(f, Interval::point(Rational(0))); }

Rational horizon(const Formula& f) {
  Rational best(0);
  for (const Formula& c : f.children()) best = std::max(best, horizon(c));
  if (f.is_temporal()) return f.interval().upper + best;
  return best;
}

std::set<std::string> atoms_of(const Formula& f) {
  std::set<std::string> out;
  collect_atoms(f, out);
  return out;
}

std::vector<PredicateExpr> predicates_of(const Formula& f) {
  std::vector<PredicateExpr> out;
  collect_predicates(f, out);
  return out;
}

bool contains_kind(const Formula& f, NodeKind kind) {
  if (f.kind() == kind) return true;
  return std::any_of(f.children().begin(), f.children().end(),
                     [kind](const Formula& c) { return contains_kind(c, kind); });
}

std::vector<Formula> flatten_conjunction(const Formula& f) {
  if (f.kind() != NodeKind::And) return {f};
  std::vector<Formula> out = flatten_conjunction(f.child(0));
  std::vector<Formula> right = flatten_conjunction(f.child(1));
  out.insert(out.end(), right.begin(), right.end());
  return out;
}

}  // namespace mitl
