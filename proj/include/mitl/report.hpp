#pragma once

#include <string>

#include <json.hpp>

#include "mitl/debugger.hpp"
#include "mitl/engine.hpp"
#include "mitl/predicates.hpp"
#include "mitl/signal_vacuity.hpp"
#include "mitl/trace.hpp"

namespace mitl {

using Json = nlohmann::ordered_json;

/// {"formula", "analyzed", "status", "findings", "stats", "config", "diagnostics"}.
/// Timing fields are left out when `timing` is false.
Json report_json(const DebugReport& report, bool timing = true);
Json config_json(const DebugConfig& cfg, const MutexSet& mutex);
Json solver_stats_json(const SolverStats& stats);
Json verdict_json(const Formula& f, const SatVerdict& verdict);
Json trace_json(const TimedTrace& trace);
Json atom_table_json(const AtomTable& table);
Json signal_finding_json(const VacuityFinding& finding);

/// Indented "key: value" rendering of a report document.
std::string render_text(const Json& doc);

}  // namespace mitl
