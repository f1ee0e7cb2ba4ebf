#include "mitl/signal_vacuity.hpp"

#include <algorithm>

#include "mitl/error.hpp"
#include "mitl/monitor.hpp"

namespace mitl {

std::string to_string(SignalFindingKind k) {
  switch (k) {
    case SignalFindingKind::AntecedentFailure: return "AntecedentFailure";
    case SignalFindingKind::MutationPass: return "MutationPass";
    case SignalFindingKind::FalsificationSource: return "FalsificationSource";
  }
  return "?";
}

namespace {

// Visits positive-polarity implications in pre-order. Returns false as soon
// as one does not qualify as request-response.
template <typename Visit>
void positive_implications(const Formula& f, bool positive, bool under_temporal, const Visit& visit) {
  switch (f.kind()) {
    case NodeKind::Not: positive_implications(f.child(0), !positive, under_temporal, visit); return;
    case NodeKind::Implies:
      if (positive) visit(f, under_temporal);
      positive_implications(f.child(0), !positive, under_temporal, visit);
      positive_implications(f.child(1), positive, under_temporal, visit);
      return;
    default: break;
  }
  for (const Formula& c : f.children()) positive_implications(c, positive, under_temporal || f.is_temporal(), visit);
}

bool has_temporal(const Formula& f) {
  return contains_kind(f, NodeKind::Eventually) || contains_kind(f, NodeKind::Always);
}

void conjunct_paths(const Formula& f, std::vector<std::size_t>& path,
                    std::vector<std::pair<std::vector<std::size_t>, Formula>>& out) {
  if (f.kind() != NodeKind::And) {
    out.emplace_back(path, f);
    return;
  }
  for (std::size_t i = 0; i < 2; ++i) {
    path.push_back(i);
    conjunct_paths(f.child(i), path, out);
    path.pop_back();
  }
}

// Paths of literal occurrences that have an And ancestor.
void literals_below_and(const Formula& f, bool below, std::vector<std::size_t>& path,
                        std::vector<std::vector<std::size_t>>& out) {
  if (f.is_literal()) {
    if (below) out.push_back(path);
    return;
  }
  for (std::size_t i = 0; i < f.children().size(); ++i) {
    path.push_back(i);
    literals_below_and(f.child(i), below || f.kind() == NodeKind::And, path, out);
    path.pop_back();
  }
}

}  // namespace

std::vector<std::pair<std::vector<std::size_t>, Formula>> root_conjuncts(const Formula& f) {
  std::vector<std::pair<std::vector<std::size_t>, Formula>> out;
  std::vector<std::size_t> path;
  conjunct_paths(f, path, out);
  return out;
}

bool classify_rr(const Formula& f) {
  bool any = false;
  bool all = true;
  positive_implications(f, true, false, [&](const Formula& imp, bool under_temporal) {
    any = true;
    if (!under_temporal && !has_temporal(imp.child(1))) all = false;
  });
  return any && all;
}

std::vector<VacuityFinding> antecedent_failure_check(const Formula& f, const TimedTrace& trace) {
  if (!classify_rr(f)) throw Error("antecedent failure analysis requires a request-response formula");
  Formula annotated = annotate_effective_intervals(f);
  std::vector<VacuityFinding> out;
  positive_implications(annotated, true, false, [&](const Formula& imp, bool) {
    const Formula& antecedent = imp.child(0);
    Interval window = *antecedent.effective_interval();
    // A singular window can only be [0,0], where G[0,0] !a is just !a.
    Formula mutation = window.singular() ? Formula::negation(antecedent)
                                         : Formula::always(window, Formula::negation(antecedent));
    if (evaluate(trace, mutation)) {
      VacuityFinding finding;
      finding.kind = SignalFindingKind::AntecedentFailure;
      finding.trace_id = trace.id();
      finding.implication = imp;
      finding.effective_interval = window;
      finding.mutated = mutation;
      out.push_back(std::move(finding));
    }
  });
  return out;
}

std::vector<VacuityFinding> literal_removal_check(const Formula& f, const TimedTrace& trace) {
  Formula normal = to_nnf(f);
  std::vector<VacuityFinding> out;
  if (!contains_kind(normal, NodeKind::Or)) return out;
  for (const auto& [prefix, conjunct] : root_conjuncts(normal)) {
    for (const LiteralOccurrence& l : lit_occurrences(conjunct)) {
      Formula mutated = substitute_occurrence(conjunct, l, false);
      if (!evaluate(trace, mutated)) continue;
      VacuityFinding finding;
      finding.kind = SignalFindingKind::MutationPass;
      finding.trace_id = trace.id();
      LiteralOccurrence at_root = l;
      at_root.path.insert(at_root.path.begin(), prefix.begin(), prefix.end());
      finding.occurrence = at_root;
      finding.mutated = mutated;
      out.push_back(std::move(finding));
    }
  }
  return out;
}

std::vector<VacuityFinding> falsification_localize(const Formula& f, const TimedTrace& trace) {
  Formula normal = to_nnf(f);
  if (evaluate(trace, normal)) throw Error("trace '" + trace.id() + "' satisfies the formula; nothing to localize");
  std::vector<std::vector<std::size_t>> candidates;
  std::vector<std::size_t> path;
  literals_below_and(normal, false, path, candidates);

  std::vector<VacuityFinding> out;
  for (const LiteralOccurrence& l : lit_occurrences(normal)) {
    if (std::find(candidates.begin(), candidates.end(), l.path) == candidates.end()) continue;
    Formula rescued = substitute_occurrence(normal, l, true);
    if (!evaluate(trace, rescued)) continue;
    VacuityFinding finding;
    finding.kind = SignalFindingKind::FalsificationSource;
    finding.trace_id = trace.id();
    finding.occurrence = l;
    finding.mutated = rescued;
    out.push_back(std::move(finding));
  }
  return out;
}

}  // namespace mitl
