#pragma once

#include <string>

#include "axkatz/congruence.hpp"
#include "axkatz/variety.hpp"

namespace axkatz {

inline constexpr int kSchemaVersion = 1;

/// Deterministic JSON rendering of a report: fixed key order, integers as
/// decimal strings, no timestamps. Re-running the same input is byte-identical.
std::string report_to_json(const VerificationReport& report);

/// Parses a variety input document (see README for the schema).
VarietyInput input_from_json(const std::string& text);
std::string input_to_json(const VarietyInput& input);

} // namespace axkatz
