// CSV and JSON serialization of measure records, scans and batch summaries.

#pragma once

#include <iosfwd>
#include <span>
#include <string>

#include "json.hpp"
#include "monolab/monogamy.hpp"

namespace monolab {

/// The fixed column list, comma separated, no trailing newline.
const std::string& csv_header();

/// One row in header order. Floats use 12 significant digits; parameter
/// columns that do not apply to the record's family are left empty.
std::string csv_row(const MeasureRecord& rec);

void write_csv(std::ostream& out, std::span<const MeasureRecord> records);
void write_csv(std::ostream& out, const ScanResult& scan);

/// %.12g formatting shared by every numeric CSV field.
std::string format_number(double v);

nlohmann::json to_json(const ParamRecord& p);
nlohmann::json to_json(const MeasureRecord& rec);
nlohmann::json to_json(const BatchSummary& s);

}  // namespace monolab
