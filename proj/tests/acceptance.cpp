// Acceptance criteria. Usage: acceptance [criterion]; runs all when omitted.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include <json.hpp>

#include "mitl/debugger.hpp"
#include "mitl/engine.hpp"
#include "mitl/generator.hpp"
#include "mitl/monitor.hpp"
#include "mitl/parser.hpp"
#include "mitl/signal_vacuity.hpp"
#include "mitl/transform.hpp"
#include "oracle.hpp"

using mitl::Formula;
using mitl::Interval;
using mitl::MutexSet;
using mitl::parse_formula;
using mitl::Rational;
using Clock = std::chrono::steady_clock;

namespace {

// Tolerances and sizes fixed by the acceptance criteria.
constexpr double kCaseStudySeconds = 60.0;
constexpr double kOracleSuiteSeconds = 300.0;
constexpr std::size_t kMinOracleFormulas = 500;
constexpr std::size_t kMinSamples = 1000;
constexpr std::size_t kMinFastPathFormulas = 500;
constexpr double kFastPathTimeRatio = 0.10;
constexpr double kMonitorSeconds = 1.0;
constexpr double kMonitorScaling = 15.0;
constexpr std::size_t kMonitorSamples = 10000;
constexpr std::size_t kMonitorFormulaNodes = 20;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : ", ") + p;
  return out;
}

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;
  void check(bool ok, const std::string& what) {
    if (!ok) pass = false;
    notes.push_back(std::string(ok ? "ok: " : "FAILED: ") + what);
  }
};

// 1. Case-study reproduction.
Outcome case_studies() {
  Outcome o;
  const MutexSet mutex{{"", {"p1", "p3"}}};
  struct Case {
    const char* name;
    const char* formula;
    mitl::DebugStatus status;
    std::vector<std::string> redundant;
  } cases[] = {
      {"phi1", "F[0,30] p1 && F[0,20] p1", mitl::DebugStatus::FailedRedundancy, {"F[0,30] p1"}},
      {"phi2", "F[0,30](p1 -> G[0,20] p1)", mitl::DebugStatus::FailedValidity, {}},
      {"phi3", "F[0,40](((p1 || p3) -> F[0,20] p2) && G[0,30] p1)", mitl::DebugStatus::FailedVacuity, {}},
      {"phi4", "G[0,40] p1 && G[0,40] F[0,10] p1", mitl::DebugStatus::FailedRedundancy, {"G[0,40] F[0,10] p1"}},
      {"phi5", "F[0,40](p1 || p3) && F[0,40] p2 && F[0,40] G[0,30] p1", mitl::DebugStatus::FailedRedundancy,
       {"F[0,40] (p1 || p3)"}},
  };
  for (const auto& c : cases) {
    mitl::DebugConfig cfg;
    cfg.extra_mutex = mutex;
    auto start = Clock::now();
    auto report = mitl::debug_pipeline(parse_formula(c.formula), {}, cfg);
    double secs = seconds_since(start);
    std::vector<std::string> redundant, vacuous, validity;
    for (const auto& f : report.findings) {
      if (f.redundancy) redundant.push_back(f.redundancy->conjunct.str());
      if (f.vacuity) vacuous.push_back(f.vacuity->occurrence.literal() + "@" + f.vacuity->occurrence.path_string());
      if (f.kind == mitl::FindingKind::Tautology || f.kind == mitl::FindingKind::Unsatisfiable)
        validity.push_back(mitl::to_string(f.kind));
    }
    std::ostringstream line;
    line << c.name << " " << mitl::to_string(report.status) << " redundant=[" << join(redundant) << "] vacuous=["
         << join(vacuous) << "] validity=[" << join(validity) << "] " << secs << "s";
    bool ok = report.status == c.status && redundant == c.redundant && secs < kCaseStudySeconds;
    if (c.status == mitl::DebugStatus::FailedValidity) ok = ok && validity == std::vector<std::string>{"Tautology"};
    if (c.status == mitl::DebugStatus::FailedVacuity) {
      bool has_p3 = false;
      for (const auto& f : report.findings)
        if (f.vacuity && f.vacuity->occurrence.atom == "p3") has_p3 = true;
      ok = ok && has_p3;
      // Every reported mutation must be equivalent to the specification.
      for (const auto& f : report.findings)
        if (f.vacuity)
          ok = ok && mitl::entails(f.vacuity->mutated, parse_formula(c.formula), mutex, {});
    }
    o.check(ok, line.str());
  }
  return o;
}

// 2. Worked examples.
Outcome worked_examples() {
  Outcome o;
  Formula f = mitl::annotate_effective_intervals(parse_formula("G[1,2](F[3,5] b -> G[4,6](c -> F[0,2] d))"));
  Interval outer = *f.child(0).child(0).effective_interval();
  Interval inner = *f.child(0).child(1).child(0).child(0).effective_interval();
  o.check(outer == Interval::closed(1, 2) && inner == Interval::closed(5, 8),
          "effective intervals " + outer.str() + " and " + inner.str());

  auto table = mitl::generate_mutex_predicates(mitl::predicates_of(parse_formula("(speed > 100) && (speed > 80)")));
  std::vector<std::string> regions;
  for (const auto& a : table.atoms()) regions.push_back(a.name + "=" + a.region.str());
  const auto& rw = table.rewrites().at("speed > 80");
  bool cells = table.atoms().size() == 2 && table.atoms()[1].region.str() == "(100,inf)" &&
               table.atoms()[0].region.str() == "(80,100]" &&
               rw == std::vector<std::string>{table.atoms()[0].name, table.atoms()[1].name} &&
               table.rewrites().at("speed > 100") == std::vector<std::string>{table.atoms()[1].name};
  o.check(cells, "cells " + join(regions) + ", speed > 80 -> " + join(rw));

  auto r = mitl::check_redundancy(parse_formula("F[0,10](p && q) && F[0,10] p && G[0,10] q"), {}, {});
  std::vector<std::string> found;
  for (const auto& x : r) found.push_back(x.conjunct.str());
  o.check(found == std::vector<std::string>{"F[0,10] (p && q)", "F[0,10] p"}, "double redundancy " + join(found));
  return o;
}

// 3. Exhaustive oracle equivalence.
Outcome oracle_equivalence() {
  Outcome o;
  auto start = Clock::now();
  auto family = oracle::enumerate_family(oracle::integer_intervals(3));
  const std::vector<MutexSet> mutexes = {{}, {{"", {"p", "q"}}}};
  std::size_t sat_checks = 0, sat_bad = 0, val_checks = 0, val_bad = 0, ent_checks = 0, ent_bad = 0;
  std::string first_bad;
  for (const auto& m : mutexes) {
    for (const Formula& f : family) {
      ++sat_checks;
      if (mitl::check_sat(f, m, {}).sat() != oracle::satisfiable(f, m)) {
        ++sat_bad;
        if (first_bad.empty()) first_bad = "check_sat " + f.str();
      }
      ++val_checks;
      if (mitl::check_validity(f, m, {}) != oracle::validity(f, m)) {
        ++val_bad;
        if (first_bad.empty()) first_bad = "check_validity " + f.str();
      }
    }
    for (std::size_t i = 0; i < family.size(); i += 2) {
      const Formula& lhs = family[i];
      const Formula& rhs = family[(i * 37 + 11) % family.size()];
      if (oracle::grid_horizon(lhs) > 6 || oracle::grid_horizon(rhs) > 6) continue;
      ++ent_checks;
      if (mitl::entails(lhs, rhs, m, {}) != oracle::entails(lhs, rhs, m)) {
        ++ent_bad;
        if (first_bad.empty()) first_bad = "entails " + lhs.str() + " |= " + rhs.str();
      }
    }
  }
  double secs = seconds_since(start);
  std::ostringstream line;
  line << family.size() << " formulas x " << mutexes.size() << " mutex settings; check_sat " << sat_checks - sat_bad
       << "/" << sat_checks << ", check_validity " << val_checks - val_bad << "/" << val_checks << ", entails "
       << ent_checks - ent_bad << "/" << ent_checks << " agree; " << secs << "s";
  if (!first_bad.empty()) line << "; first mismatch: " << first_bad;
  o.check(family.size() >= kMinOracleFormulas && sat_bad + val_bad + ent_bad == 0 && secs < kOracleSuiteSeconds,
          line.str());
  return o;
}

oracle::FormulaShape claim_shape() {
  oracle::FormulaShape s;
  s.depth = 3;
  s.open_intervals = true;
  return s;
}

const std::vector<std::string> kSampleAtoms = {"a", "b"};

// 4a. Every satisfying trace of an NNF formula with a disjunction
// satisfies some mutation f[l <- false].
Outcome claim_removal() {
  Outcome o;
  std::mt19937 rng(2024);
  auto shape = claim_shape();
  shape.force_or = true;
  std::size_t pairs = 0, violations = 0;
  std::string example;
  while (pairs < kMinSamples) {
    Formula f = oracle::random_formula(rng, kSampleAtoms, shape);
    auto tr = oracle::random_trace(rng, kSampleAtoms, Rational(6), 5);
    if (!mitl::evaluate(tr, f)) continue;
    ++pairs;
    if (mitl::literal_removal_check(f, tr).empty()) {
      ++violations;
      if (example.empty()) {
        std::ostringstream e;
        e << f.str() << " on trace [";
        for (std::size_t i = 0; i < tr.size(); ++i)
          e << (i ? " " : "") << tr.times()[i].str() << ":a=" << tr.column("a")[i].str()
            << ",b=" << tr.column("b")[i].str();
        e << "]";
        example = e.str();
      }
    }
  }
  // Smallest known counterexample, checked directly.
  Formula g = parse_formula("G[0,2](a || b)");
  mitl::TimedTrace alt("alt", Rational(2), {Rational(0), Rational(1)},
                       {{"a", {Rational(1), Rational(0)}}, {"b", {Rational(0), Rational(1)}}});
  bool minimal = mitl::evaluate(alt, g) && mitl::literal_removal_check(g, alt).empty();
  std::ostringstream line;
  line << pairs << " satisfied (formula, trace) pairs, " << violations << " without a MutationPass";
  if (!example.empty()) line << "; e.g. " << example;
  if (minimal) line << "; also G[0,2](a || b) with a on [0,1), b on [1,2]";
  o.check(violations == 0, line.str());
  return o;
}

// 4b. Every falsifying trace of an NNF formula with a conjunction falsifies
// f[l <- true] for some literal l below a conjunction.
Outcome corollary_localization() {
  Outcome o;
  std::mt19937 rng(2025);
  auto shape = claim_shape();
  shape.force_and = true;
  std::size_t pairs = 0, violations = 0, no_source = 0;
  std::string example;
  while (pairs < kMinSamples) {
    Formula f = oracle::random_formula(rng, kSampleAtoms, shape);
    auto tr = oracle::random_trace(rng, kSampleAtoms, Rational(6), 5);
    if (mitl::evaluate(tr, f)) continue;
    ++pairs;
    auto sources = mitl::falsification_localize(f, tr);
    if (sources.empty()) ++no_source;
    // Literals below a conjunction that keep the trace falsifying.
    std::size_t candidates = 0;
    bool some_still_false = false;
    for (const auto& l : mitl::lit_occurrences(f)) {
      bool below_and = false;
      for (std::size_t d = 0; d < l.path.size() && !below_and; ++d) {
        std::vector<std::size_t> prefix(l.path.begin(), l.path.begin() + static_cast<long>(d));
        below_and = mitl::subformula_at(f, prefix).kind() == mitl::NodeKind::And;
      }
      if (!below_and) continue;
      ++candidates;
      if (!mitl::evaluate(tr, mitl::substitute_occurrence(f, l, true))) some_still_false = true;
    }
    if (candidates > 0 && !some_still_false) {
      ++violations;
      if (example.empty()) example = f.str();
    }
  }
  // Smallest known counterexample: a and b alternate, so setting either to
  // true makes the formula hold.
  Formula g = parse_formula("F[0,2](a && b)");
  mitl::TimedTrace alt("alt", Rational(2), {Rational(0), Rational(1)},
                       {{"a", {Rational(1), Rational(0)}}, {"b", {Rational(0), Rational(1)}}});
  bool minimal = !mitl::evaluate(alt, g) && mitl::falsification_localize(g, alt).size() == 2;
  std::ostringstream line;
  line << pairs << " falsified (formula, trace) pairs; " << violations
       << " where every literal below a conjunction rescues the trace when set to true";
  if (!example.empty()) line << " (e.g. " << example << ")";
  line << "; " << no_source << " with no FalsificationSource";
  if (minimal) line << "; also F[0,2](a && b) with a on [0,1), b on [1,2]";
  o.check(violations == 0 && no_source == 0, line.str());
  return o;
}

// 4c. f[l <- false] true implies f true.
Outcome monotonicity() {
  Outcome o;
  std::mt19937 rng(2026);
  auto shape = claim_shape();
  std::size_t triples = 0, violations = 0;
  while (triples < kMinSamples) {
    Formula f = oracle::random_formula(rng, kSampleAtoms, shape);
    auto tr = oracle::random_trace(rng, kSampleAtoms, Rational(6), 5);
    bool holds = mitl::evaluate(tr, f);
    for (const auto& l : mitl::lit_occurrences(f)) {
      ++triples;
      if (mitl::evaluate(tr, mitl::substitute_occurrence(f, l, false)) && !holds) ++violations;
    }
  }
  o.check(violations == 0, std::to_string(triples) + " (formula, occurrence, trace) triples, " +
                               std::to_string(violations) + " violations");
  return o;
}

// 5. Fast-path soundness and speed.
Outcome fast_path() {
  Outcome o;
  std::mt19937 rng(77);
  std::size_t formulas = 0, conclusive = 0, mismatches = 0;
  const MutexSet mutex{{"", {"p", "q"}}};
  while (formulas < kMinFastPathFormulas) {
    oracle::FormulaShape shape;
    shape.integer_endpoints = true;
    shape.depth = 3;
    shape.eventually = formulas % 2 == 0;
    shape.always = !shape.eventually;
    Formula f = oracle::random_formula(rng, {"p", "q", "r"}, shape);
    ++formulas;
    const MutexSet& m = formulas % 3 == 0 ? mutex : MutexSet{};
    auto fast = mitl::ltl_fast_path(f, m);
    if (fast == mitl::FastPathResult::Inconclusive) continue;
    ++conclusive;
    if ((fast == mitl::FastPathResult::Sat) != mitl::check_sat(f, m, {}).sat()) ++mismatches;
  }
  o.check(mismatches == 0, std::to_string(formulas) + " fragment formulas, " + std::to_string(conclusive) +
                               " conclusive, " + std::to_string(mismatches) + " disagree with the grid engine");

  const char* rows[] = {
      "G[0,40](p1 -> G[0,10] p1)",
      "G[0,30] !p1 || G[0,20] !p1",
      "G[0,40]((!p1 && !p3) || G[0,20] !p2 || G[0,30] p1)",
      "G[0,40]((p1 || p3) -> G[0,20](p2 -> G[0,30] p1))",
      "G[0,40] p1",
      "G[0,40](p1 && G[0,10] p1)",
      "G[0,40] p1 && G[0,30] p4",
      "G[0,40] p5 && G[0,70] p5",
  };
  const MutexSet p13{{"", {"p1", "p3"}}};
  double fast_time = 0, engine_time = 0;
  bool all_sat = true;
  constexpr int kRepeats = 5;
  for (const char* row : rows) {
    Formula f = mitl::to_nnf(parse_formula(row));
    for (int r = 0; r < kRepeats; ++r) {
      auto s = Clock::now();
      all_sat = all_sat && mitl::ltl_fast_path(f, p13) == mitl::FastPathResult::Sat;
      fast_time += seconds_since(s);
      s = Clock::now();
      all_sat = all_sat && mitl::check_sat(f, p13, {}).sat();
      engine_time += seconds_since(s);
    }
  }
  std::ostringstream line;
  line << "AlwaysOnly rows: fast path " << fast_time * 1000 / kRepeats << "ms vs engine "
       << engine_time * 1000 / kRepeats << "ms (" << 100.0 * fast_time / engine_time << "%)";
  o.check(all_sat && fast_time < kFastPathTimeRatio * engine_time, line.str());
  return o;
}

// 6. Signal-vacuity harness on generated traces, run through the CLI.
Outcome signal_harness() {
  Outcome o;
  const char* reqs[] = {
      "G[0,27.5]((g2 && F(0,0.04] g1) -> G[0,2.5] !g2)",
      "G[0,27.5]((!g1 && F(0,0.04] g1) -> G[0,2.5] g1)",
      "G[0,30](rpm <= 4500) -> G[0,10](speed <= 85)",
      "F[0,10]((speed <= 80) -> G[0,30](rpm <= 4500))",
  };
  constexpr std::size_t kTraces = 200;
  constexpr std::uint64_t kSeed = 1;
  auto traces = mitl::generate_synthetic_traces(mitl::builtin_profile("at"), kTraces, kSeed);
  std::map<std::string, const mitl::TimedTrace*> by_id;
  for (const auto& t : traces) by_id[t.id()] = &t;
  for (std::size_t i = 0; i < std::size(reqs); ++i) {
    std::string cmd = std::string(MITLDBG_PATH) + " vacuity-signal -e '" + reqs[i] +
                      "' --generate at --count " + std::to_string(kTraces) + " --seed " + std::to_string(kSeed);
    FILE* pipe = popen(cmd.c_str(), "r");
    std::string out;
    char buf[4096];
    for (std::size_t n; (n = fread(buf, 1, sizeof buf, pipe)) > 0;) out.append(buf, n);
    pclose(pipe);
    nlohmann::json doc = nlohmann::json::parse(out);
    std::size_t replayed = 0, confirmed = 0;
    std::set<std::string> flagged;
    for (const auto& f : doc["findings"]) {
      flagged.insert(f["trace"].get<std::string>());
      ++replayed;
      const mitl::TimedTrace* t = by_id.at(f["trace"].get<std::string>());
      Formula mutation = parse_formula(f["mutated"].get<std::string>());
      if (f["kind"] == "AntecedentFailure" && mitl::evaluate(*t, mutation)) ++confirmed;
    }
    bool ok = doc["analysis"] == "antecedent-failure" && replayed == confirmed &&
              flagged.size() == doc["vacuous"].get<std::size_t>() && doc["total"].get<std::size_t>() == kTraces;
    o.check(ok, "requirement " + std::to_string(i + 1) + ": " + doc["summary"].get<std::string>() +
                    " vacuous; " + std::to_string(confirmed) + "/" + std::to_string(replayed) +
                    " mutations confirmed by the monitor");
  }
  return o;
}

mitl::TimedTrace long_trace(std::size_t samples, std::uint64_t seed) {
  std::mt19937 rng(static_cast<unsigned>(seed));
  std::bernoulli_distribution coin(0.3);
  std::uniform_int_distribution<int> level(0, 100);
  std::vector<Rational> times;
  std::map<std::string, std::vector<Rational>> cols;
  for (std::size_t i = 0; i < samples; ++i) {
    times.emplace_back(static_cast<std::int64_t>(i));
    cols["p"].emplace_back(coin(rng) ? 1 : 0);
    cols["q"].emplace_back(coin(rng) ? 1 : 0);
    cols["x"].emplace_back(level(rng));
  }
  return {"long", Rational(static_cast<std::int64_t>(samples)), times, cols};
}

// 7. Monitoring cost.
Outcome monitor_performance() {
  Outcome o;
  Formula f = parse_formula(
      "G[0,500]((p && F[0,5] q) -> G[1,30](q || (x > 40))) && F[0,200](G[0,20] !p || (x <= 10) && F[0,3] q)");
  std::size_t nodes = f.size();
  auto time_on = [&](std::size_t samples) {
    auto tr = long_trace(samples, 3);
    double best = 1e9;
    for (int r = 0; r < 5; ++r) {
      auto s = Clock::now();
      for (Rational t : {Rational(0), Rational(static_cast<std::int64_t>(samples / 2))}) (void)mitl::evaluate(tr, f, t);
      best = std::min(best, seconds_since(s) / 2);
    }
    return best;
  };
  double small = time_on(kMonitorSamples / 10);
  double large = time_on(kMonitorSamples);
  std::ostringstream line;
  line << nodes << "-node formula: " << large * 1000 << "ms on " << kMonitorSamples << " samples, "
       << small * 1000 << "ms on " << kMonitorSamples / 10 << " (x" << large / small << ")";
  o.check(nodes == kMonitorFormulaNodes && large < kMonitorSeconds && large / small <= kMonitorScaling, line.str());
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, std::pair<std::string, std::function<Outcome()>>>> criteria = {
      {"1", {"case-study reproduction", case_studies}},
      {"2", {"worked examples", worked_examples}},
      {"3", {"brute-force oracle equivalence", oracle_equivalence}},
      {"4a", {"literal removal on satisfying traces", claim_removal}},
      {"4b", {"falsification localization", corollary_localization}},
      {"4c", {"mutation monotonicity", monotonicity}},
      {"5", {"fast-path soundness and speed", fast_path}},
      {"6", {"signal-vacuity harness", signal_harness}},
      {"7", {"monitoring performance", monitor_performance}},
  };
  std::string only = argc > 1 ? argv[1] : "";
  bool all_pass = true, matched = false;
  for (const auto& [id, entry] : criteria) {
    if (!only.empty() && id != only) continue;
    matched = true;
    Outcome out;
    try {
      out = entry.second();
    } catch (const std::exception& e) {
      out.check(false, std::string("exception: ") + e.what());
    }
    all_pass = all_pass && out.pass;
    std::cout << (out.pass ? "PASS" : "FAIL") << " criterion " << id << " (" << entry.first << ")\n";
    for (const auto& n : out.notes) std::cout << "    " << n << "\n";
  }
  if (!matched) {
    std::cerr << "unknown criterion '" << only << "'\n";
    return 2;
  }
  return all_pass ? 0 : 1;
}
