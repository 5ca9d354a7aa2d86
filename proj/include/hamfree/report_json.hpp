#pragma once

// JSON (schema 1) and CSV renderings of the verifier reports. The default
// JSON is byte-identical across job counts; runtime_ms is added only on
// request since wall time is inherently nondeterministic.

#include <string>

#include "hamfree/verify.hpp"

namespace hamfree {

std::string to_json_string(const ExtremalReport& rep, bool include_runtime = false);
std::string to_json_string(const DegreeTheoremReport& rep, bool include_runtime = false);
std::string to_json_string(const CliqueBoundReport& rep, bool include_runtime = false);
std::string to_json_string(const FamilyCheckReport& rep, bool include_runtime = false);
std::string to_json_string(const WitnessReport& rep);

extern const char* const kExtremalCsvHeader;
std::string to_csv_line(const ExtremalReport& rep);

}  // namespace hamfree
