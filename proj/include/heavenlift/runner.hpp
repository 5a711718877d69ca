#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "heavenlift/config.hpp"
#include "heavenlift/fields.hpp"

namespace heavenlift {

inline constexpr const char* kToolVersion = "0.1.0";

// A finished run: the report document (render with render_report) and the
// overall verdict.  `passed == false` maps to exit code 1.
struct RunOutcome {
  nlohmann::ordered_json report;
  bool passed = false;
};

// Instantiates the evaluator a config describes.
FieldEvaluator build_family_field(const RunConfig& cfg);

// The residual battery a family is expected to satisfy; used when a command
// needs equations but the config lists none (sample dumps, demo runs).
std::vector<EquationId> default_equations(const RunConfig& cfg);

// Executes every check in cfg.suite against the family field.
RunOutcome run_verify(const RunConfig& cfg);

// Geometry-focused run: the suite's geometry/invariance checks, or default
// ones when the suite has none.
RunOutcome run_geometry_command(const RunConfig& cfg);

// Frequency table for the travelling-mode partner system.  Appends the CSV
// form to *csv when given.
RunOutcome run_dispersion_command(const RunConfig& cfg, std::string* csv);

// Built-in end-to-end narratives: seed, lift, residual battery, transform,
// curvature.  Runs the elliptic and the hyperbolic pipeline.
RunOutcome run_lift_demo();

// Grid dump: sampled points with field values and normalized residuals of
// the suite's (or default) equations.  RFC 4180 commas, header row, LF.
std::string sample_csv(const RunConfig& cfg);

}  // namespace heavenlift
