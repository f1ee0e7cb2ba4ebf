#include "mitl/sat_solver.hpp"

#include <algorithm>
#include <stdexcept>

namespace mitl {

SolverStats& SolverStats::operator+=(const SolverStats& o) {
  variables += o.variables;
  clauses += o.clauses;
  decisions += o.decisions;
  propagations += o.propagations;
  conflicts += o.conflicts;
  return *this;
}

int SatSolver::new_var() {
  int v = num_vars();
  values_.push_back(-1);
  saved_phase_.push_back(0);
  level_.push_back(0);
  reason_.push_back(kNoReason);
  seen_.push_back(0);
  watches_.emplace_back();
  watches_.emplace_back();
  return v;
}

int SatSolver::lit_value(Literal l) const {
  std::int8_t v = values_[static_cast<std::size_t>(l.var())];
  if (v < 0) return -1;
  return l.negated() ? 1 - v : v;
}

void SatSolver::assign(Literal l, int reason) {
  auto v = static_cast<std::size_t>(l.var());
  values_[v] = l.negated() ? 0 : 1;
  level_[v] = decision_level();
  reason_[v] = reason;
  trail_.push_back(l);
}

int SatSolver::attach(std::vector<Literal> lits, bool /*learnt*/) {
  int idx = static_cast<int>(clauses_.size());
  watches_[lits[0].code].push_back(idx);
  watches_[lits[1].code].push_back(idx);
  clauses_.push_back(std::move(lits));
  return idx;
}

void SatSolver::add_clause(std::span<const Literal> input) {
  if (solved_) throw std::logic_error("clauses cannot be added after solve()");
  std::vector<Literal> lits(input.begin(), input.end());
  for (Literal l : lits) {
    if (l.var() < 0 || l.var() >= num_vars()) throw std::out_of_range("literal refers to unknown variable");
  }
  std::sort(lits.begin(), lits.end(), [](Literal a, Literal b) { return a.code < b.code; });
  lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
  for (std::size_t i = 1; i < lits.size(); ++i) {
    if (lits[i].var() == lits[i - 1].var()) return;  // tautology
  }
  problem_.push_back(lits);
  ++original_clauses_;
  if (inconsistent_) return;
  if (lits.empty()) {
    inconsistent_ = true;
    return;
  }
  if (lits.size() == 1) {
    int v = lit_value(lits[0]);
    if (v == 0) inconsistent_ = true;
    if (v == -1) assign(lits[0], kNoReason);
    return;
  }
  attach(std::move(lits), false);
}

int SatSolver::propagate() {
  while (qhead_ < trail_.size()) {
    Literal p = trail_[qhead_++];
    Literal false_lit = ~p;
    ++stats_.propagations;
    std::vector<int>& ws = watches_[false_lit.code];
    std::size_t keep = 0;
    for (std::size_t i = 0; i < ws.size(); ++i) {
      int ci = ws[i];
      std::vector<Literal>& c = clauses_[static_cast<std::size_t>(ci)];
      if (c[0] == false_lit) std::swap(c[0], c[1]);
      if (lit_value(c[0]) == 1) {
        ws[keep++] = ci;
        continue;
      }
      bool moved = false;
      for (std::size_t k = 2; k < c.size(); ++k) {
        if (lit_value(c[k]) != 0) {
          std::swap(c[1], c[k]);
          watches_[c[1].code].push_back(ci);
          moved = true;
          break;
        }
      }
      if (moved) continue;
      ws[keep++] = ci;
      if (lit_value(c[0]) == 0) {
        for (std::size_t r = i + 1; r < ws.size(); ++r) ws[keep++] = ws[r];
        ws.resize(keep);
        return ci;
      }
      assign(c[0], ci);
    }
    ws.resize(keep);
  }
  return kNoReason;
}

void SatSolver::analyze(int conflict, std::vector<Literal>& learnt, int& backjump_level) {
  learnt.clear();
  learnt.push_back(Literal{});  // slot for the asserting literal
  int pending = 0;
  Literal p{};
  bool have_p = false;
  std::size_t index = trail_.size();
  int ci = conflict;
  while (true) {
    const std::vector<Literal>& c = clauses_[static_cast<std::size_t>(ci)];
    for (std::size_t k = have_p ? 1 : 0; k < c.size(); ++k) {
      Literal q = c[k];
      auto v = static_cast<std::size_t>(q.var());
      if (seen_[v] || level_[v] == 0) continue;
      seen_[v] = 1;
      if (level_[v] == decision_level()) {
        ++pending;
      } else {
        learnt.push_back(q);
      }
    }
    do {
      p = trail_[--index];
    } while (!seen_[static_cast<std::size_t>(p.var())]);
    have_p = true;
    seen_[static_cast<std::size_t>(p.var())] = 0;
    if (--pending == 0) break;
    ci = reason_[static_cast<std::size_t>(p.var())];
    // Reason clauses keep their implied literal in slot 0.
  }
  learnt[0] = ~p;
  for (std::size_t k = 1; k < learnt.size(); ++k) seen_[static_cast<std::size_t>(learnt[k].var())] = 0;

  backjump_level = 0;
  if (learnt.size() > 1) {
    std::size_t best = 1;
    for (std::size_t k = 2; k < learnt.size(); ++k) {
      if (level_[static_cast<std::size_t>(learnt[k].var())] > level_[static_cast<std::size_t>(learnt[best].var())])
        best = k;
    }
    std::swap(learnt[1], learnt[best]);
    backjump_level = level_[static_cast<std::size_t>(learnt[1].var())];
  }
}

void SatSolver::backtrack(int level) {
  if (decision_level() <= level) return;
  std::size_t stop = trail_lim_[static_cast<std::size_t>(level)];
  for (std::size_t i = trail_.size(); i-- > stop;) {
    auto v = static_cast<std::size_t>(trail_[i].var());
    saved_phase_[v] = values_[v];
    values_[v] = -1;
    reason_[v] = kNoReason;
    next_decision_ = std::min(next_decision_, static_cast<int>(v));
  }
  trail_.resize(stop);
  trail_lim_.resize(static_cast<std::size_t>(level));
  qhead_ = trail_.size();
}

bool SatSolver::solve() {
  if (solved_) throw std::logic_error("solve() called twice");
  solved_ = true;
  if (inconsistent_) return false;
  std::vector<Literal> learnt;
  while (true) {
    int conflict = propagate();
    if (conflict != kNoReason) {
      ++stats_.conflicts;
      if (decision_level() == 0) return false;
      int level = 0;
      analyze(conflict, learnt, level);
      backtrack(level);
      if (learnt.size() == 1) {
        assign(learnt[0], kNoReason);
      } else {
        int ci = attach(learnt, true);
        assign(learnt[0], ci);
      }
      continue;
    }
    while (next_decision_ < num_vars() && values_[static_cast<std::size_t>(next_decision_)] >= 0) ++next_decision_;
    if (next_decision_ == num_vars()) return true;
    ++stats_.decisions;
    trail_lim_.push_back(trail_.size());
    bool positive = saved_phase_[static_cast<std::size_t>(next_decision_)] == 1;
    assign(Literal::of(next_decision_, !positive), kNoReason);
  }
}

SolverStats SatSolver::stats() const {
  SolverStats s = stats_;
  s.variables = static_cast<std::uint64_t>(num_vars());
  s.clauses = original_clauses_;
  return s;
}

}  // namespace mitl
