#pragma once

#include <string>
#include <vector>

#include "cyclocode/verify.hpp"

namespace cyclo {

// One JSON object per record, compact, keys in a fixed order so that emitting,
// parsing, and re-emitting a record is byte identical.
std::string record_to_json(const VerificationRecord& rec);

// All records as newline-delimited JSON followed by one summary object line.
std::string records_to_jsonl(const std::vector<VerificationRecord>& recs,
                             const GridSummary& summary);

// Parse one JSON record line and serialize it again (used to demonstrate the
// byte-identity round trip without exposing the JSON library downstream).
std::string reserialize_json(const std::string& line);

// Flat CSV, one row per (spec, rank); invalid or errored specs emit a single
// row whose rank block is empty.  The column order is fixed and documented in
// the header row.
std::string records_to_csv(const std::vector<VerificationRecord>& recs);

// Single human-readable summary line, also printed by the grid tool.
std::string summary_line(const GridSummary& summary);

}  // namespace cyclo
