#pragma once

#include <iosfwd>

#include "xprod/sweep.hpp"
#include "xprod/system_io.hpp"

namespace xprod {

inline constexpr const char* kToolVersion = "0.1.0";

/// Reports are deterministic given (spec, seed): ordered keys, library
/// formatting, no wall-clock content.
nlohmann::ordered_json analyze_dynamics(const SystemSpec& spec);
nlohmann::ordered_json analyze_norms(const SystemSpec& spec);
nlohmann::ordered_json analyze_ideals(const SystemSpec& spec);
nlohmann::ordered_json analyze_cohomology(const SystemSpec& spec);
nlohmann::ordered_json analyze_verify(const SystemSpec& spec);
nlohmann::ordered_json analyze(const SystemSpec& spec, const std::string& command);

nlohmann::ordered_json sweep_report(const SweepResult& result);

void render_text(const nlohmann::ordered_json& report, std::ostream& os);

/// False only for verify/sweep style reports that carry an inconsistency.
bool report_consistent(const nlohmann::ordered_json& report);

}  // namespace xprod
