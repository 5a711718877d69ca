#pragma once

#include <string>

#include "json.hpp"

namespace heavenlift {

// Report documents are built as nlohmann::ordered_json (keys keep insertion
// order) and rendered by this writer instead of json::dump so that every
// float goes through one fixed 17-significant-digit format.  Two runs with
// the same config and seed therefore produce byte-identical output; the only
// run-dependent key is "generated_at", which comparisons must strip.
std::string render_report(const nlohmann::ordered_json& doc);

// %.17g with "inf"/"nan" normalized, shared by reports and CSV dumps.
std::string format_double(double v);

// UTC wall-clock in ISO 8601, the single nondeterministic report field.
std::string timestamp_utc();

// One CSV field per RFC 4180: quoted only when it contains commas, quotes or
// newlines.
std::string csv_escape(const std::string& field);

}  // namespace heavenlift
