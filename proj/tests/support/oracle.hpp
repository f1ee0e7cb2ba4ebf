// Brute-force reference semantics used to check the library.
#pragma once

#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "mitl/debugger.hpp"
#include "mitl/formula.hpp"
#include "mitl/predicates.hpp"
#include "mitl/trace.hpp"

namespace oracle {

/// Boolean trace sampled at integer points 0..last, constant in between.
struct GridTrace {
  std::vector<std::string> atoms;
  int last = 0;
  std::vector<std::vector<bool>> bits;  // bits[atom][point]
};

std::set<std::string> atoms(const mitl::Formula& f);
int grid_horizon(const mitl::Formula& f);

/// Discrete semantics at integer time t. Intervals must have integer
/// endpoints; windows are clipped to [0, last].
bool holds(const mitl::Formula& f, const GridTrace& trace, int t);

/// Calls visit on every grid trace over `atoms` with points 0..last that
/// respects `mutex`. Stops when visit returns false.
void for_each_trace(const std::vector<std::string>& atoms, int last, const mitl::MutexSet& mutex,
                    const std::function<bool(const GridTrace&)>& visit);

bool satisfiable(const mitl::Formula& f, const mitl::MutexSet& mutex);
bool entails(const mitl::Formula& lhs, const mitl::Formula& rhs, const mitl::MutexSet& mutex);
mitl::Validity validity(const mitl::Formula& f, const mitl::MutexSet& mutex);

mitl::TimedTrace to_timed(const GridTrace& trace, const std::string& id = "grid");

/// Random NNF formulas over `atoms`.
struct FormulaShape {
  int depth = 3;
  bool open_intervals = false;
  bool integer_endpoints = false;  // endpoints in {0,1,2,3}
  bool eventually = true;
  bool always = true;
  bool force_or = false;   // result contains a disjunction
  bool force_and = false;  // result contains a conjunction
};
mitl::Formula random_formula(std::mt19937& rng, const std::vector<std::string>& atoms, const FormulaShape& shape);

/// Random boolean trace with change points on multiples of 1/4.
mitl::TimedTrace random_trace(std::mt19937& rng, const std::vector<std::string>& atoms,
                              const mitl::Rational& duration, int changes);

/// Closed integer intervals with lower < upper <= max_end.
std::vector<mitl::Interval> integer_intervals(int max_end);

/// Every formula of the enumeration family used by the oracle suites:
/// up to two atoms, up to two temporal operators, endpoints <= 3.
std::vector<mitl::Formula> enumerate_family(const std::vector<mitl::Interval>& intervals);

}  // namespace oracle
