#pragma once

#include <iosfwd>

#include <json.hpp>

#include "straus/scan.hpp"

namespace straus::cli {

/// {"x", "k", "d", "type"} or null.
nlohmann::ordered_json witness_json(const std::optional<Witness>& w);

/// One JSONL line. In first-only mode the k sets and counts are null.
nlohmann::ordered_json record_json(const ScanRecord& rec, ScanMode mode);

/// Run summary without wall time, so that it is reproducible.
nlohmann::ordered_json summary_json(const ScanReport& report);

/// One compact record per line, ascending p.
void write_jsonl(const ScanReport& report, std::ostream& os);

}  // namespace straus::cli
