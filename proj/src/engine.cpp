#include "mitl/engine.hpp"

#include <functional>
#include <map>
#include <memory>
#include <set>
#include <sstream>
#include <unordered_map>

#include "mitl/error.hpp"
#include "mitl/transform.hpp"

namespace mitl {

std::string to_string(SatStatus s) { return s == SatStatus::Sat ? "SAT" : "UNSAT"; }

std::string to_string(Fragment f) {
  switch (f) {
    case Fragment::EventuallyOnly: return "EventuallyOnly";
    case Fragment::AlwaysOnly: return "AlwaysOnly";
    case Fragment::Mixed: return "Mixed";
  }
  return "?";
}

std::string to_string(FastPathResult r) {
  switch (r) {
    case FastPathResult::Sat: return "SAT";
    case FastPathResult::Unsat: return "UNSAT";
    case FastPathResult::Inconclusive: return "Inconclusive";
  }
  return "?";
}

namespace {

struct NodeAtTime {
  const void* node;
  long point;
  friend bool operator==(const NodeAtTime&, const NodeAtTime&) = default;
};

struct NodeAtTimeHash {
  std::size_t operator()(const NodeAtTime& k) const {
    return std::hash<const void*>()(k.node) ^ (std::hash<long>()(k.point) * 0x9E3779B97F4A7C15ULL);
  }
};

void require_engine_input(const Formula& f, const Rational& step) {
  switch (f.kind()) {
    case NodeKind::Predicate: throw Error("predicate '" + f.predicate_expr().str() + "' must be abstracted to atoms");
    case NodeKind::Implies: throw Error("engine input must be in negation normal form");
    case NodeKind::Not:
      if (!f.is_literal()) throw Error("engine input must be in negation normal form");
      break;
    case NodeKind::Eventually:
    case NodeKind::Always: {
      const Interval& i = f.interval();
      if (!i.is_closed()) throw Error("engine requires closed intervals, got " + i.str());
      if (!i.lower.is_multiple_of(step) || !i.upper.is_multiple_of(step))
        throw Error("interval " + i.str() + " is not aligned to grid step " + step.str());
      break;
    }
    default: break;
  }
  for (const Formula& c : f.children()) require_engine_input(c, step);
}

/// Shared machinery for the grid unfolding and the untimed fast path: atom
/// variables per time point, memoized definition variables per (node, point),
/// one-directional definitions (all contexts are positive in NNF).
class Unfolder {
 public:
  Unfolder(const std::set<std::string>& atoms, long points) : points_(points) {
    // Atoms first, earliest point first: this is the decision order.
    for (long k = 0; k < points; ++k) {
      for (const std::string& a : atoms) atom_vars_[a].push_back(solver_.new_var());
    }
    true_var_ = solver_.new_var();
    solver_.add_clause({Literal::of(true_var_)});
  }

  void add_mutex(const MutexSet& mutex) {
    for (const MutexGroup& g : mutex) {
      std::vector<const std::vector<int>*> present;
      for (const std::string& m : g.members) {
        auto it = atom_vars_.find(m);
        if (it != atom_vars_.end()) present.push_back(&it->second);
      }
      for (long k = 0; k < points_; ++k) {
        for (std::size_t i = 0; i < present.size(); ++i) {
          for (std::size_t j = i + 1; j < present.size(); ++j) {
            solver_.add_clause({Literal::of((*present[i])[static_cast<std::size_t>(k)], true),
                                Literal::of((*present[j])[static_cast<std::size_t>(k)], true)});
          }
        }
      }
    }
  }

  SatSolver& solver() { return solver_; }
  const SatSolver& solver() const { return solver_; }
  const std::map<std::string, std::vector<int>>& atom_vars() const { return atom_vars_; }
  Literal truth() const { return Literal::of(true_var_); }
  Literal falsity() const { return Literal::of(true_var_, true); }

  /// `window(f, k)` lists the points a temporal node at k quantifies over.
  template <typename Window>
  Literal encode(const Formula& f, long k, const Window& window) {
    NodeAtTime key{f.identity(), k};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Literal out = encode_node(f, k, window);
    memo_.emplace(key, out);
    return out;
  }

 private:
  template <typename Window>
  Literal encode_node(const Formula& f, long k, const Window& window) {
    switch (f.kind()) {
      case NodeKind::True: return truth();
      case NodeKind::False: return falsity();
      case NodeKind::Atom: return Literal::of(atom_vars_.at(f.name())[static_cast<std::size_t>(k)]);
      case NodeKind::Not: return ~Literal::of(atom_vars_.at(f.child(0).name())[static_cast<std::size_t>(k)]);
      case NodeKind::And:
      case NodeKind::Or: {
        Literal l = encode(f.child(0), k, window);
        Literal r = encode(f.child(1), k, window);
        Literal d = Literal::of(solver_.new_var());
        if (f.kind() == NodeKind::And) {
          solver_.add_clause({~d, l});
          solver_.add_clause({~d, r});
        } else {
          solver_.add_clause({~d, l, r});
        }
        return d;
      }
      case NodeKind::Eventually:
      case NodeKind::Always: {
        auto [first, last] = window(f, k);
        if (first > last) return f.kind() == NodeKind::Eventually ? falsity() : truth();
        std::vector<Literal> body;
        for (long j = first; j <= last; ++j) body.push_back(encode(f.child(0), j, window));
        Literal d = Literal::of(solver_.new_var());
        if (f.kind() == NodeKind::Eventually) {
          body.insert(body.begin(), ~d);
          solver_.add_clause(body);
        } else {
          for (Literal b : body) solver_.add_clause({~d, b});
        }
        return d;
      }
      default: throw Error("unsupported node in engine input");
    }
  }

  SatSolver solver_;
  std::map<std::string, std::vector<int>> atom_vars_;
  std::unordered_map<NodeAtTime, Literal, NodeAtTimeHash> memo_;
  long points_;
  int true_var_ = 0;
};

struct GridProblem {
  Rational step;
  Rational horizon;
  long last_point = 0;
};

GridProblem prepare_grid(const Formula& f, const GridConfig& cfg) {
  if (cfg.step <= Rational(0)) throw Error("grid step must be positive");
  require_engine_input(f, cfg.step);
  GridProblem p{cfg.step, horizon(f), 0};
  if (cfg.horizon_cap && p.horizon > *cfg.horizon_cap)
    throw Error("formula horizon " + p.horizon.str() + " exceeds cap " + cfg.horizon_cap->str());
  Rational n = p.horizon / cfg.step;
  if (!n.is_integer()) throw Error("horizon is not aligned to grid step");
  p.last_point = n.numerator();
  return p;
}

auto grid_window(const GridProblem& p) {
  return [p](const Formula& f, long k) {
    long lo = k + (f.interval().lower / p.step).numerator();
    long hi = std::min(k + (f.interval().upper / p.step).numerator(), p.last_point);
    return std::pair<long, long>{lo, hi};
  };
}

std::unique_ptr<Unfolder> build_grid(const Formula& f, const MutexSet& mutex, const GridProblem& p) {
  auto u = std::make_unique<Unfolder>(atoms_of(f), p.last_point + 1);
  u->add_mutex(mutex);
  Literal root = u->encode(f, 0, grid_window(p));
  u->solver().add_clause({root});
  return u;
}

TimedTrace decode_witness(const Unfolder& u, const GridProblem& p) {
  std::vector<Rational> times;
  std::map<std::string, std::vector<Rational>> columns;
  for (const auto& [name, _] : u.atom_vars()) columns[name];
  for (long k = 0; k <= p.last_point; ++k) {
    bool changed = k == 0;
    for (const auto& [name, vars] : u.atom_vars()) {
      bool v = u.solver().value(vars[static_cast<std::size_t>(k)]);
      auto& col = columns[name];
      if (!changed && (col.back() == Rational(1)) != v) changed = true;
    }
    if (!changed) continue;
    times.push_back(p.step * Rational(k));
    for (const auto& [name, vars] : u.atom_vars()) {
      bool v = u.solver().value(vars[static_cast<std::size_t>(k)]);
      columns[name].push_back(Rational(v ? 1 : 0));
    }
  }
  return TimedTrace("witness", p.horizon, std::move(times), std::move(columns));
}

SatVerdict solve_grid(const Formula& f, const MutexSet& mutex, const GridConfig& cfg) {
  GridProblem p = prepare_grid(f, cfg);
  auto u = build_grid(f, mutex, p);
  SatVerdict v;
  v.status = u->solver().solve() ? SatStatus::Sat : SatStatus::Unsat;
  v.stats = u->solver().stats();
  if (v.sat()) v.witness = decode_witness(*u, p);
  return v;
}

// Model of the formula obtained by erasing every G, or nullopt.
std::optional<std::map<std::string, bool>> erased_always_model(const Formula& f, const MutexSet& mutex) {
  Unfolder u(atoms_of(f), 1);
  u.add_mutex(mutex);
  auto same_point = [](const Formula&, long k) { return std::pair<long, long>{k, k}; };
  u.solver().add_clause({u.encode(f, 0, same_point)});
  if (!u.solver().solve()) return std::nullopt;
  std::map<std::string, bool> model;
  for (const auto& [name, vars] : u.atom_vars()) model[name] = u.solver().value(vars[0]);
  return model;
}

bool untimed_eventually_sat(const Formula& f, const MutexSet& mutex) {
  std::function<long(const Formula&)> count = [&](const Formula& g) -> long {
    long n = g.kind() == NodeKind::Eventually ? 1 : 0;
    for (const Formula& c : g.children()) n += count(c);
    return n;
  };
  long positions = count(f) + 1;
  Unfolder u(atoms_of(f), positions);
  u.add_mutex(mutex);
  auto suffix = [positions](const Formula&, long k) { return std::pair<long, long>{k, positions - 1}; };
  u.solver().add_clause({u.encode(f, 0, suffix)});
  return u.solver().solve();
}

void require_pure_nnf(const Formula& f) {
  if (!is_nnf(f)) throw Error("fragment classification requires negation normal form");
}

}  // namespace

SatVerdict check_sat(const Formula& f, const MutexSet& mutex, const GridConfig& cfg) {
  SatVerdict v = solve_grid(f, mutex, cfg);
  if (cfg.refine_check) {
    GridConfig fine = cfg;
    fine.step = cfg.step / Rational(2);
    fine.refine_check = false;
    SatVerdict finer = solve_grid(f, mutex, fine);
    if (finer.status != v.status) {
      v.diagnostics.push_back("grid refinement mismatch: " + to_string(v.status) + " at step " + cfg.step.str() +
                              " but " + to_string(finer.status) + " at step " + fine.step.str());
    }
  }
  return v;
}

Fragment fragment_classify(const Formula& f) {
  require_pure_nnf(f);
  bool ev = contains_kind(f, NodeKind::Eventually);
  bool al = contains_kind(f, NodeKind::Always);
  if (ev && al) return Fragment::Mixed;
  return ev ? Fragment::EventuallyOnly : Fragment::AlwaysOnly;
}

FastPathResult ltl_fast_path(const Formula& f, const MutexSet& mutex) {
  if (contains_kind(f, NodeKind::Predicate)) throw Error("predicates must be abstracted to atoms");
  switch (fragment_classify(f)) {
    case Fragment::Mixed: throw Error("fast path applies only to pure F or pure G formulas");
    case Fragment::AlwaysOnly:
      return erased_always_model(f, mutex) ? FastPathResult::Sat : FastPathResult::Inconclusive;
    case Fragment::EventuallyOnly:
      return untimed_eventually_sat(f, mutex) ? FastPathResult::Inconclusive : FastPathResult::Unsat;
  }
  return FastPathResult::Inconclusive;
}

SatVerdict decide(const Formula& f, const MutexSet& mutex, const GridConfig& cfg) {
  if (cfg.fast_path && is_nnf(f) && !contains_kind(f, NodeKind::Predicate)) {
    GridProblem p = prepare_grid(f, cfg);
    Fragment frag = fragment_classify(f);
    if (frag == Fragment::AlwaysOnly) {
      if (auto model = erased_always_model(f, mutex)) {
        SatVerdict v;
        v.status = SatStatus::Sat;
        v.by_fast_path = true;
        std::map<std::string, std::vector<Rational>> columns;
        for (const auto& [name, value] : *model) columns[name] = {Rational(value ? 1 : 0)};
        v.witness = TimedTrace("witness", p.horizon, {Rational(0)}, std::move(columns));
        return v;
      }
    } else if (frag == Fragment::EventuallyOnly && !untimed_eventually_sat(f, mutex)) {
      SatVerdict v;
      v.status = SatStatus::Unsat;
      v.by_fast_path = true;
      return v;
    }
  }
  return check_sat(f, mutex, cfg);
}

bool entails(const Formula& lhs, const Formula& rhs, const MutexSet& mutex, const GridConfig& cfg) {
  Formula query = Formula::conjunction(to_nnf(lhs), negate(rhs));
  return !decide(query, mutex, cfg).sat();
}

std::string export_dimacs(const Formula& f, const MutexSet& mutex, const GridConfig& cfg) {
  GridProblem p = prepare_grid(f, cfg);
  auto u = build_grid(f, mutex, p);
  std::ostringstream out;
  out << "c grid unfolding: step " << p.step.str() << ", horizon " << p.horizon.str() << "\n";
  for (long k = 0; k <= p.last_point; ++k) {
    for (const auto& [name, vars] : u->atom_vars()) {
      out << "c atom " << name << " t=" << (p.step * Rational(k)).str() << " var=" << vars[static_cast<std::size_t>(k)] + 1
          << "\n";
    }
  }
  const auto& clauses = u->solver().problem_clauses();
  out << "p cnf " << u->solver().num_vars() << " " << clauses.size() << "\n";
  for (const auto& c : clauses) {
    for (Literal l : c) out << l.dimacs() << " ";
    out << "0\n";
  }
  return out.str();
}

}  // namespace mitl
