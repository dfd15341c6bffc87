#pragma once

#include <string>
#include <vector>

#include "heunspectra/spectrum.hpp"

namespace heunspectra {

// Shortest round-trip form with 17 significant digits.
std::string format_number(double v);

// Writes through a sibling temporary file and renames it into place.
void write_atomic(const std::string& path, const std::string& content);

std::string csv_row(const std::vector<std::string>& fields);

// Columns index, value, parity, cluster_id.
std::string spectrum_csv(const SpectrumReport& r);
// One JSON object per eigenvalue, preceded by a metadata record.
std::string spectrum_jsonl(const SpectrumReport& r, const std::string& metadata_json);

}  // namespace heunspectra
