#pragma once

#include "perceptronium/separability.hpp"
#include "perceptronium/types.hpp"

#include "json.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace perceptronium {

/// Matrix wire format: {"dim": n, "entries": [[re, im], ...]} row-major.
/// Round-trips to 1e-12 (shortest-representation doubles, not exact
/// decimals).
nlohmann::json matrix_to_json(const Matrix& a);
Matrix matrix_from_json(const nlohmann::json& j);

nlohmann::json separability_report_to_json(const SeparabilityReport& report);

/// Doubles rendered with enough digits to round-trip ("%.17g").
std::string format_double(double v);

/// CSV block with '#'-prefixed metadata lines followed by a header row and
/// data rows; the deterministic output format used for golden files.
struct CsvDocument {
    std::vector<std::pair<std::string, std::string>> metadata;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    std::string metadata_value(const std::string& key, const std::string& fallback = "") const;
};

void write_csv(std::ostream& os, const CsvDocument& doc);
CsvDocument read_csv(std::istream& is);

}  // namespace perceptronium
