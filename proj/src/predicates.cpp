#include "mitl/predicates.hpp"

#include <algorithm>

#include "mitl/error.hpp"

namespace mitl {

AtomTable::AtomTable(std::vector<PredicateAtom> atoms, std::map<std::string, std::vector<std::string>> rewrites,
                     MutexSet mutex)
    : atoms_(std::move(atoms)), rewrites_(std::move(rewrites)), mutex_(std::move(mutex)) {}

const PredicateAtom* AtomTable::find_atom(const std::string& name) const {
  auto it = std::find_if(atoms_.begin(), atoms_.end(), [&](const PredicateAtom& a) { return a.name == name; });
  return it == atoms_.end() ? nullptr : &*it;
}

std::vector<PredicateAtom> decompose_pair(const PredicateAtom& a, const PredicateAtom& b) {
  if (a.variable != b.variable)
    throw Error("cannot decompose predicates over different variables '" + a.variable + "' and '" + b.variable + "'");
  IntervalSet both = a.region.intersect(b.region);
  if (both.empty()) throw Error("cannot decompose disjoint predicates");
  std::vector<PredicateAtom> out;
  for (IntervalSet part : {both, a.region.minus(b.region), b.region.minus(a.region)}) {
    if (!part.empty()) out.push_back(PredicateAtom{"", a.variable, std::move(part)});
  }
  return out;
}

namespace {

// One pass of pairwise decomposition; false once no two regions overlap.
bool refine_once(std::vector<PredicateAtom>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    for (std::size_t j = i + 1; j < cells.size(); ++j) {
      if (!cells[i].region.overlaps(cells[j].region)) continue;
      std::vector<PredicateAtom> parts = decompose_pair(cells[i], cells[j]);
      cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(j));
      cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(i));
      cells.insert(cells.end(), parts.begin(), parts.end());
      return true;
    }
  }
  return false;
}

bool lower_endpoint_less(const PredicateAtom& x, const PredicateAtom& y) {
  const Bound& a = x.region.spans().front().lower;
  const Bound& b = y.region.spans().front().lower;
  if (a.infinite || b.infinite) return a.infinite && !b.infinite;
  if (a.value != b.value) return a.value < b.value;
  return a.closed && !b.closed;
}

}  // namespace

AtomTable generate_mutex_predicates(const std::vector<PredicateExpr>& predicates) {
  std::map<std::string, std::vector<PredicateAtom>> by_variable;
  for (const PredicateExpr& p : predicates) {
    auto& cells = by_variable[p.variable];
    cells.push_back(PredicateAtom{p.str(), p.variable, p.region()});
  }

  std::vector<PredicateAtom> atoms;
  MutexSet mutex;
  for (auto& [variable, cells] : by_variable) {
    while (refine_once(cells)) {
    }
    std::sort(cells.begin(), cells.end(), lower_endpoint_less);
    MutexGroup group{variable, {}};
    for (std::size_t k = 0; k < cells.size(); ++k) {
      cells[k].name = variable + "_" + std::to_string(k);
      group.members.push_back(cells[k].name);
      atoms.push_back(cells[k]);
    }
    if (group.members.size() > 1) mutex.push_back(std::move(group));
  }

  std::map<std::string, std::vector<std::string>> rewrites;
  for (const PredicateExpr& p : predicates) {
    IntervalSet region = p.region();
    std::vector<std::string>& names = rewrites[p.str()];
    names.clear();
    for (const PredicateAtom& a : atoms) {
      if (a.variable == p.variable && a.region.subset_of(region)) names.push_back(a.name);
    }
  }
  return AtomTable(std::move(atoms), std::move(rewrites), std::move(mutex));
}

Formula abstract_formula(const Formula& f, const AtomTable& table) {
  if (f.kind() == NodeKind::Predicate) {
    auto it = table.rewrites().find(f.predicate_expr().str());
    if (it == table.rewrites().end()) throw Error("unknown predicate '" + f.predicate_expr().str() + "'");
    std::vector<Formula> parts;
    for (const std::string& name : it->second) parts.push_back(Formula::atom(name));
    return Formula::disjunction_of(parts);
  }
  if (f.children().empty()) return f;
  std::vector<Formula> kids;
  kids.reserve(f.children().size());
  for (const Formula& c : f.children()) kids.push_back(abstract_formula(c, table));
  return f.with_children(std::move(kids));
}

}  // namespace mitl
