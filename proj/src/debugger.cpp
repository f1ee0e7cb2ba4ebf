#include "mitl/debugger.hpp"

#include <chrono>

#include "mitl/error.hpp"
#include "mitl/signal_vacuity.hpp"

namespace mitl {

std::string to_string(Validity v) {
  switch (v) {
    case Validity::Unsatisfiable: return "Unsatisfiable";
    case Validity::Tautology: return "Tautology";
    case Validity::Valid: return "Valid";
  }
  return "?";
}

std::string to_string(DebugStatus s) {
  switch (s) {
    case DebugStatus::FailedValidity: return "FailedValidity";
    case DebugStatus::FailedRedundancy: return "FailedRedundancy";
    case DebugStatus::FailedVacuity: return "FailedVacuity";
    case DebugStatus::Passed: return "Passed";
  }
  return "?";
}

std::string to_string(FindingKind k) {
  switch (k) {
    case FindingKind::Unsatisfiable: return "Unsatisfiable";
    case FindingKind::Tautology: return "Tautology";
    case FindingKind::RedundantConjunct: return "RedundantConjunct";
    case FindingKind::VacuousOccurrence: return "VacuousOccurrence";
  }
  return "?";
}

namespace {

bool satisfiable(const Formula& nnf, const MutexSet& mutex, const GridConfig& cfg, QueryLog* log) {
  SatVerdict v = decide(nnf, mutex, cfg);
  if (log) {
    ++log->queries;
    if (v.by_fast_path) ++log->fast_path_hits;
    log->solver += v.stats;
    for (auto& d : v.diagnostics) log->diagnostics.push_back(d + " in " + nnf.str());
  }
  return v.sat();
}

bool implies(const Formula& lhs, const Formula& rhs, const MutexSet& mutex, const GridConfig& cfg,
             QueryLog* log) {
  return !satisfiable(Formula::conjunction(to_nnf(lhs), negate(rhs)), mutex, cfg, log);
}

void chain_operands(const Formula& f, std::vector<std::size_t>& path,
                    std::vector<std::pair<std::vector<std::size_t>, Formula>>& out) {
  if (f.kind() != NodeKind::And) {
    out.emplace_back(path, f);
    return;
  }
  for (std::size_t i = 0; i < 2; ++i) {
    path.push_back(i);
    chain_operands(f.child(i), path, out);
    path.pop_back();
  }
}

// Roots of maximal conjunction chains, pre-order.
void chain_roots(const Formula& f, bool parent_is_and, std::vector<std::size_t>& path,
                 std::vector<std::vector<std::size_t>>& out) {
  if (f.kind() == NodeKind::And && !parent_is_and) out.push_back(path);
  for (std::size_t i = 0; i < f.children().size(); ++i) {
    path.push_back(i);
    chain_roots(f.child(i), f.kind() == NodeKind::And, path, out);
    path.pop_back();
  }
}

MutexSet merged_mutex(const AtomTable& table, const DebugConfig& cfg) {
  if (!cfg.use_mutex) return {};
  MutexSet out = table.mutex_groups();
  out.insert(out.end(), cfg.extra_mutex.begin(), cfg.extra_mutex.end());
  return out;
}

}  // namespace

Validity check_validity(const Formula& f, const MutexSet& mutex, const GridConfig& cfg, QueryLog* log) {
  if (!satisfiable(to_nnf(f), mutex, cfg, log)) return Validity::Unsatisfiable;
  if (!satisfiable(negate(f), mutex, cfg, log)) return Validity::Tautology;
  return Validity::Valid;
}

std::vector<Redundancy> check_redundancy(const Formula& f, const MutexSet& mutex, const GridConfig& cfg,
                                         bool early_stop, QueryLog* log) {
  Formula root = to_nnf(f);
  std::vector<Redundancy> out;
  std::vector<std::vector<std::size_t>> roots;
  std::vector<std::size_t> scratch;
  chain_roots(root, false, scratch, roots);
  for (const auto& chain_path : roots) {
    const Formula& chain = subformula_at(root, chain_path);
    std::vector<std::pair<std::vector<std::size_t>, Formula>> operands;
    std::vector<std::size_t> local;
    chain_operands(chain, local, operands);
    for (std::size_t j = 0; j < operands.size(); ++j) {
      const Formula& candidate = operands[j].second;
      bool duplicate_of_earlier = false;
      std::vector<Formula> others;
      for (std::size_t i = 0; i < operands.size(); ++i) {
        if (i == j) continue;
        bool same = operands[i].second == candidate;
        if (same && i < j) duplicate_of_earlier = true;
        if (same && i > j) continue;
        others.push_back(operands[i].second);
      }
      if (duplicate_of_earlier || implies(Formula::conjunction_of(others), candidate, mutex, cfg, log)) {
        std::vector<std::size_t> conjunct_path = chain_path;
        conjunct_path.insert(conjunct_path.end(), operands[j].first.begin(), operands[j].first.end());
        out.push_back({candidate, chain, std::move(conjunct_path), chain_path});
        if (early_stop) return out;
      }
    }
  }
  return out;
}

std::vector<Vacuity> check_vacuity(const Formula& f, const MutexSet& mutex, const GridConfig& cfg,
                                   bool early_stop, QueryLog* log) {
  Formula root = to_nnf(f);
  auto conjuncts = root_conjuncts(root);
  std::vector<Vacuity> out;
  for (std::size_t i = 0; i < conjuncts.size(); ++i) {
    const auto& [prefix, conjunct] = conjuncts[i];
    std::vector<Formula> rest;
    for (std::size_t k = 0; k < conjuncts.size(); ++k)
      if (k != i) rest.push_back(conjuncts[k].second);
    for (const LiteralOccurrence& l : lit_occurrences(conjunct)) {
      Formula weakened = substitute_occurrence(conjunct, l, false);
      if (!implies(root, weakened, mutex, cfg, log)) continue;
      LiteralOccurrence at_root = l;
      at_root.path.insert(at_root.path.begin(), prefix.begin(), prefix.end());
      Formula mutated = rest.empty() ? weakened : Formula::conjunction(Formula::conjunction_of(rest), weakened);
      out.push_back({std::move(at_root), std::move(mutated)});
      if (early_stop) return out;
    }
  }
  return out;
}

DebugReport debug_pipeline(const Formula& f, const AtomTable& table, const DebugConfig& cfg) {
  using Clock = std::chrono::steady_clock;
  DebugReport report;
  report.formula = f.str();
  report.config = cfg;
  report.mutex = merged_mutex(table, cfg);
  Formula analyzed = to_nnf(abstract_formula(f, table));
  report.analyzed = analyzed.str();
  for (const char* name : {"validity", "redundancy", "vacuity"}) {
    report.stages.emplace_back();
    report.stages.back().stage = name;
  }

  auto run_stage = [&](std::size_t index, auto&& body) {
    QueryLog log;
    auto start = Clock::now();
    body(log);
    StageStats& s = report.stages[index];
    s.ran = true;
    s.queries = log.queries;
    s.fast_path_hits = log.fast_path_hits;
    s.solver = log.solver;
    s.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    report.diagnostics.insert(report.diagnostics.end(), log.diagnostics.begin(), log.diagnostics.end());
  };

  Validity validity = Validity::Valid;
  run_stage(0, [&](QueryLog& log) { validity = check_validity(analyzed, report.mutex, cfg.grid, &log); });
  if (validity != Validity::Valid) {
    report.findings.push_back(
        {validity == Validity::Tautology ? FindingKind::Tautology : FindingKind::Unsatisfiable, {}, {}});
    report.status = DebugStatus::FailedValidity;
    return report;
  }

  std::vector<Redundancy> redundant;
  run_stage(1, [&](QueryLog& log) {
    redundant = check_redundancy(analyzed, report.mutex, cfg.grid, cfg.early_stop, &log);
  });
  for (auto& r : redundant) report.findings.push_back({FindingKind::RedundantConjunct, r, {}});
  if (!redundant.empty()) {
    report.status = DebugStatus::FailedRedundancy;
    if (cfg.early_stop) return report;
  }

  std::vector<Vacuity> vacuous;
  run_stage(2, [&](QueryLog& log) {
    vacuous = check_vacuity(analyzed, report.mutex, cfg.grid, cfg.early_stop, &log);
  });
  for (auto& v : vacuous) report.findings.push_back({FindingKind::VacuousOccurrence, {}, v});
  if (!vacuous.empty() && report.status == DebugStatus::Passed) report.status = DebugStatus::FailedVacuity;
  return report;
}

int exit_code(const DebugReport& report) { return report.status == DebugStatus::Passed ? 0 : 1; }

}  // namespace mitl
