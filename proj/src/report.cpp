#include "mitl/report.hpp"

#include <algorithm>
#include <sstream>

namespace mitl {

namespace {

Json path_json(const std::vector<std::size_t>& path) {
  Json out = Json::array();
  for (std::size_t i : path) out.push_back(i);
  return out;
}

Json mutex_json(const MutexSet& mutex) {
  Json out = Json::array();
  for (const MutexGroup& g : mutex) out.push_back({{"variable", g.variable}, {"members", g.members}});
  return out;
}

Json finding_json(const Finding& f) {
  Json out = {{"kind", to_string(f.kind)}};
  if (f.redundancy) {
    out["conjunct"] = f.redundancy->conjunct.str();
    out["enclosing"] = f.redundancy->enclosing.str();
    out["conjunctPath"] = path_json(f.redundancy->conjunct_path);
  }
  if (f.vacuity) {
    out["literal"] = f.vacuity->occurrence.literal();
    out["occurrencePath"] = path_json(f.vacuity->occurrence.path);
    out["mutated"] = f.vacuity->mutated.str();
  }
  return out;
}

void render(const Json& j, int depth, std::ostringstream& out) {
  std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
  auto scalar = [](const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (value.is_structured() && !value.empty()) {
        out << pad << key << ":\n";
        render(value, depth + 1, out);
      } else {
        out << pad << key << ": " << (value.is_structured() ? "none" : scalar(value)) << "\n";
      }
    }
  } else if (j.is_array()) {
    bool flat = std::none_of(j.begin(), j.end(), [](const Json& v) { return v.is_structured(); });
    if (flat) {
      out << pad;
      for (std::size_t i = 0; i < j.size(); ++i) out << (i ? ", " : "") << scalar(j[i]);
      out << "\n";
      return;
    }
    for (std::size_t i = 0; i < j.size(); ++i) {
      out << pad << "- [" << i << "]\n";
      render(j[i], depth + 1, out);
    }
  } else {
    out << pad << scalar(j) << "\n";
  }
}

}  // namespace

Json solver_stats_json(const SolverStats& s) {
  return {{"variables", s.variables},
          {"clauses", s.clauses},
          {"decisions", s.decisions},
          {"propagations", s.propagations},
          {"conflicts", s.conflicts}};
}

Json config_json(const DebugConfig& cfg, const MutexSet& mutex) {
  Json out = {{"gridStep", cfg.grid.step.str()},
              {"horizonCap", cfg.grid.horizon_cap ? Json(cfg.grid.horizon_cap->str()) : Json(nullptr)},
              {"earlyStop", cfg.early_stop},
              {"refineCheck", cfg.grid.refine_check},
              {"fastPath", cfg.grid.fast_path},
              {"mutex", cfg.use_mutex}};
  out["mutexGroups"] = mutex_json(mutex);
  return out;
}

Json report_json(const DebugReport& report, bool timing) {
  Json out = {{"formula", report.formula}, {"analyzed", report.analyzed}, {"status", to_string(report.status)}};
  out["findings"] = Json::array();
  for (const Finding& f : report.findings) out["findings"].push_back(finding_json(f));
  Json stages = Json::array();
  for (const StageStats& s : report.stages) {
    Json st = {{"stage", s.stage}, {"ran", s.ran}, {"queries", s.queries}, {"fastPathHits", s.fast_path_hits}};
    st["solver"] = solver_stats_json(s.solver);
    if (timing) st["elapsedMs"] = s.elapsed_ms;
    stages.push_back(std::move(st));
  }
  out["stats"] = {{"stages", stages}};
  out["config"] = config_json(report.config, report.mutex);
  out["diagnostics"] = report.diagnostics;
  return out;
}

Json trace_json(const TimedTrace& trace) {
  Json times = Json::array();
  for (const Rational& t : trace.times()) times.push_back(t.str());
  Json columns = Json::object();
  for (const auto& [name, values] : trace.columns()) {
    Json col = Json::array();
    for (const Rational& v : values) col.push_back(v.str());
    columns[name] = std::move(col);
  }
  return {{"id", trace.id()}, {"duration", trace.duration().str()}, {"times", times}, {"columns", columns}};
}

Json verdict_json(const Formula& f, const SatVerdict& verdict) {
  Json out = {{"formula", f.str()}, {"status", to_string(verdict.status)}, {"fastPath", verdict.by_fast_path}};
  out["witness"] = verdict.witness ? trace_json(*verdict.witness) : Json(nullptr);
  out["stats"] = solver_stats_json(verdict.stats);
  out["diagnostics"] = verdict.diagnostics;
  return out;
}

Json atom_table_json(const AtomTable& table) {
  Json atoms = Json::array();
  for (const PredicateAtom& a : table.atoms())
    atoms.push_back({{"name", a.name}, {"variable", a.variable}, {"region", a.region.str()}});
  Json rewrites = Json::object();
  for (const auto& [pred, names] : table.rewrites()) rewrites[pred] = names;
  return {{"atoms", atoms}, {"rewrites", rewrites}, {"mutexGroups", mutex_json(table.mutex_groups())}};
}

Json signal_finding_json(const VacuityFinding& f) {
  Json out = {{"kind", to_string(f.kind)}, {"trace", f.trace_id}};
  if (f.implication) out["implication"] = f.implication->str();
  if (f.effective_interval) out["effectiveInterval"] = f.effective_interval->str();
  if (f.occurrence) {
    out["literal"] = f.occurrence->literal();
    out["occurrencePath"] = path_json(f.occurrence->path);
  }
  out["mutated"] = f.mutated.str();
  return out;
}

std::string render_text(const Json& doc) {
  std::ostringstream out;
  render(doc, 0, out);
  return out.str();
}

}  // namespace mitl
