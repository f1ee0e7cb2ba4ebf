#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "mitl/debugger.hpp"
#include "mitl/engine.hpp"
#include "mitl/error.hpp"
#include "mitl/generator.hpp"
#include "mitl/monitor.hpp"
#include "mitl/parser.hpp"
#include "mitl/predicates.hpp"
#include "mitl/report.hpp"
#include "mitl/signal_vacuity.hpp"
#include "mitl/transform.hpp"

using namespace mitl;

namespace {

constexpr int kExitError = 2;

struct Options {
  std::string grid_step = "1";
  std::string horizon_cap;
  bool early_stop = false;
  bool refine_check = false;
  bool no_mutex = false;
  bool no_fast_path = false;
  bool no_timing = false;
  std::vector<std::string> mutex;
  std::string format = "json";
  std::uint64_t seed = 1;
  std::string duration;
  std::string out;
  bool inline_text = false;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Formula load_formula(const std::string& arg, const Options& o) {
  return parse_formula(o.inline_text ? arg : slurp(arg));
}

Rational positive_rational(const std::string& text, const char* flag) {
  Rational r = Rational::parse(text);
  if (r <= Rational(0)) throw CLI::ValidationError(flag, "must be positive");
  return r;
}

DebugConfig debug_config(const Options& o) {
  DebugConfig cfg;
  cfg.grid.step = positive_rational(o.grid_step, "--grid-step");
  if (!o.horizon_cap.empty()) cfg.grid.horizon_cap = positive_rational(o.horizon_cap, "--horizon-cap");
  cfg.grid.refine_check = o.refine_check;
  cfg.grid.fast_path = !o.no_fast_path;
  cfg.early_stop = o.early_stop;
  cfg.use_mutex = !o.no_mutex;
  for (const std::string& group : o.mutex) {
    MutexGroup g;
    std::stringstream s(group);
    for (std::string name; std::getline(s, name, ',');)
      if (!name.empty()) g.members.push_back(name);
    if (g.members.size() < 2) throw CLI::ValidationError("--mutex", "needs at least two atoms");
    cfg.extra_mutex.push_back(std::move(g));
  }
  return cfg;
}

std::optional<Rational> duration_override(const Options& o) {
  if (o.duration.empty()) return std::nullopt;
  return positive_rational(o.duration, "--duration");
}

void emit(const Json& doc, const Options& o) {
  std::string text = o.format == "text" ? render_text(doc) : doc.dump(2) + "\n";
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw Error("cannot write '" + o.out + "'");
  f << text;
}

// Predicates decomposed into mutex atoms; the engine sees atoms only.
struct Prepared {
  AtomTable table;
  MutexSet mutex;
  Formula query;
};

Prepared prepare(const Formula& f, const DebugConfig& cfg) {
  Prepared p{generate_mutex_predicates(predicates_of(f)), {}, Formula::truth()};
  if (cfg.use_mutex) {
    p.mutex = p.table.mutex_groups();
    p.mutex.insert(p.mutex.end(), cfg.extra_mutex.begin(), cfg.extra_mutex.end());
  }
  p.query = to_nnf(abstract_formula(f, p.table));
  return p;
}

std::vector<TimedTrace> load_traces(const std::vector<std::string>& paths, const Options& o) {
  std::vector<TimedTrace> out;
  for (const std::string& p : paths) out.push_back(read_trace_file(p, duration_override(o)));
  return out;
}

GeneratorProfile load_profile(const std::string& arg) {
  for (const std::string& name : builtin_profile_names())
    if (arg == name) return builtin_profile(name);
  return parse_profile_json(slurp(arg));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Debugging and monitoring for bounded MITL specifications"};
  app.require_subcommand(1);
  Options o;

  auto engine_flags = [&](CLI::App* sub) {
    sub->add_option("--grid-step", o.grid_step, "Time step of the satisfiability grid");
    sub->add_option("--horizon-cap", o.horizon_cap, "Reject formulas with a larger horizon");
    sub->add_flag("--refine-check", o.refine_check, "Re-solve at half the step and report mismatches");
    sub->add_flag("--no-mutex", o.no_mutex, "Do not constrain mutually exclusive atoms");
    sub->add_option("--mutex", o.mutex, "Comma-separated atoms of which at most one holds")->take_all();
    sub->add_flag("--no-fast-path", o.no_fast_path, "Skip the untimed pre-check");
  };
  auto common_flags = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--out", o.out, "Write the report to this file");
    sub->add_flag("-e,--inline", o.inline_text, "Formula arguments are formula text, not files");
  };

  std::string spec, rhs, profile;
  std::vector<std::string> traces;
  std::size_t count = 1;

  auto* debug = app.add_subcommand("debug", "Validity, redundancy and vacuity checks");
  debug->add_option("spec", spec, "Specification file")->required();
  debug->add_flag("--early-stop", o.early_stop, "Stop at the first finding");
  debug->add_flag("--no-timing", o.no_timing, "Leave timing out of the report");
  engine_flags(debug);
  common_flags(debug);

  auto* sat = app.add_subcommand("sat", "Satisfiability with a witness trace");
  std::string dimacs;
  sat->add_option("spec", spec, "Specification file")->required();
  sat->add_option("--dimacs", dimacs, "Also write the grid unfolding as DIMACS CNF");
  engine_flags(sat);
  common_flags(sat);

  auto* ent = app.add_subcommand("entails", "Whether lhs entails rhs");
  ent->add_option("lhs", spec, "Left-hand specification")->required();
  ent->add_option("rhs", rhs, "Right-hand specification")->required();
  engine_flags(ent);
  common_flags(ent);

  auto* mon = app.add_subcommand("monitor", "Evaluate a specification on traces");
  mon->add_option("spec", spec, "Specification file")->required();
  mon->add_option("traces", traces, "Trace CSV files")->required();
  mon->add_option("--duration", o.duration, "Override trace duration");
  common_flags(mon);

  auto* vac = app.add_subcommand("vacuity-signal", "Find traces that pass for unintended reasons");
  vac->add_option("spec", spec, "Specification file")->required();
  vac->add_option("traces", traces, "Trace CSV files");
  vac->add_option("--generate", profile, "Use generated traces from this profile instead of files");
  vac->add_option("--count", count, "Number of generated traces");
  vac->add_option("--seed", o.seed, "Generator seed");
  vac->add_option("--duration", o.duration, "Override trace duration");
  common_flags(vac);

  auto* loc = app.add_subcommand("localize", "Literals responsible for a falsification");
  std::string trace_path;
  loc->add_option("spec", spec, "Specification file")->required();
  loc->add_option("trace", trace_path, "Trace CSV file")->required();
  loc->add_option("--duration", o.duration, "Override trace duration");
  common_flags(loc);

  auto* dec = app.add_subcommand("decompose", "Mutually exclusive atoms for the predicates of a spec");
  dec->add_option("spec", spec, "Specification file")->required();
  common_flags(dec);

  auto* gen = app.add_subcommand("gen-traces", "Write synthetic traces as CSV files");
  std::string out_dir = ".";
  gen->add_option("profile", profile, "Built-in profile name or JSON profile file")->required();
  gen->add_option("--count", count, "Number of traces");
  gen->add_option("--seed", o.seed, "Generator seed");
  gen->add_option("--dir", out_dir, "Output directory");
  gen->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  try {
    if (debug->parsed()) {
      DebugConfig cfg = debug_config(o);
      Formula f = load_formula(spec, o);
      DebugReport report = debug_pipeline(f, generate_mutex_predicates(predicates_of(f)), cfg);
      emit(report_json(report, !o.no_timing), o);
      return exit_code(report);
    }
    if (sat->parsed()) {
      DebugConfig cfg = debug_config(o);
      Prepared p = prepare(load_formula(spec, o), cfg);
      SatVerdict v = decide(p.query, p.mutex, cfg.grid);
      if (!dimacs.empty()) {
        std::ofstream d(dimacs);
        if (!d) throw Error("cannot write '" + dimacs + "'");
        d << export_dimacs(p.query, p.mutex, cfg.grid);
      }
      emit(verdict_json(p.query, v), o);
      return v.sat() ? 0 : 1;
    }
    if (ent->parsed()) {
      DebugConfig cfg = debug_config(o);
      Formula lhs = load_formula(spec, o);
      Formula right = load_formula(rhs, o);
      Prepared p = prepare(Formula::conjunction(lhs, Formula::negation(right)), cfg);
      SatVerdict v = decide(p.query, p.mutex, cfg.grid);
      Json doc = {{"lhs", lhs.str()}, {"rhs", right.str()}, {"entails", !v.sat()}};
      doc["counterexample"] = v.witness ? trace_json(*v.witness) : Json(nullptr);
      doc["stats"] = solver_stats_json(v.stats);
      emit(doc, o);
      return v.sat() ? 1 : 0;
    }
    if (mon->parsed()) {
      Formula f = load_formula(spec, o);
      Json results = Json::array();
      std::size_t satisfied = 0;
      auto loaded = load_traces(traces, o);
      for (const TimedTrace& t : loaded) {
        bool ok = evaluate(t, f);
        satisfied += ok ? 1 : 0;
        results.push_back({{"trace", t.id()}, {"satisfied", ok}});
      }
      emit({{"formula", f.str()}, {"satisfied", satisfied}, {"total", loaded.size()}, {"results", results}}, o);
      return satisfied == loaded.size() ? 0 : 1;
    }
    if (vac->parsed()) {
      Formula f = load_formula(spec, o);
      std::vector<TimedTrace> loaded;
      if (!profile.empty()) {
        if (!traces.empty()) throw Error("give trace files or --generate, not both");
        GeneratorProfile gp = load_profile(profile);
        if (auto d = duration_override(o)) gp.duration = *d;
        loaded = generate_synthetic_traces(gp, count, o.seed);
      } else {
        if (traces.empty()) throw Error("no traces given");
        loaded = load_traces(traces, o);
      }
      bool rr = classify_rr(f);
      Json findings = Json::array();
      std::size_t vacuous = 0;
      for (const TimedTrace& t : loaded) {
        auto found = rr ? antecedent_failure_check(f, t) : literal_removal_check(f, t);
        vacuous += found.empty() ? 0 : 1;
        for (const VacuityFinding& v : found) findings.push_back(signal_finding_json(v));
      }
      Json doc = {{"formula", f.str()},
                  {"analysis", rr ? "antecedent-failure" : "literal-removal"},
                  {"vacuous", vacuous},
                  {"total", loaded.size()},
                  {"summary", std::to_string(vacuous) + " / " + std::to_string(loaded.size())}};
      doc["findings"] = findings;
      if (!profile.empty()) doc["generator"] = {{"profile", profile}, {"count", count}, {"seed", o.seed}};
      emit(doc, o);
      return vacuous == 0 ? 0 : 1;
    }
    if (loc->parsed()) {
      Formula f = load_formula(spec, o);
      TimedTrace t = read_trace_file(trace_path, duration_override(o));
      Json findings = Json::array();
      for (const VacuityFinding& v : falsification_localize(f, t)) findings.push_back(signal_finding_json(v));
      emit({{"formula", to_nnf(f).str()}, {"trace", t.id()}, {"findings", findings}}, o);
      return findings.empty() ? 0 : 1;
    }
    if (dec->parsed()) {
      Formula f = load_formula(spec, o);
      AtomTable table = generate_mutex_predicates(predicates_of(f));
      Json doc = atom_table_json(table);
      doc["formula"] = f.str();
      doc["abstracted"] = abstract_formula(f, table).str();
      emit(doc, o);
      return 0;
    }
    if (gen->parsed()) {
      GeneratorProfile gp = load_profile(profile);
      std::filesystem::create_directories(out_dir);
      Json written = Json::array();
      for (const TimedTrace& t : generate_synthetic_traces(gp, count, o.seed)) {
        std::filesystem::path path = std::filesystem::path(out_dir) / (t.id() + ".csv");
        std::ofstream f(path);
        if (!f) throw Error("cannot write '" + path.string() + "'");
        write_trace_csv(f, t);
        written.push_back(path.string());
      }
      emit({{"profile", gp.name}, {"seed", o.seed}, {"files", written}}, o);
      return 0;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
