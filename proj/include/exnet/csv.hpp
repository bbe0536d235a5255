#pragma once

#include <string>
#include <vector>

namespace exnet::csv {

/// Splits one CSV line on commas. No quoting: the formats here never embed
/// commas in fields. Trailing \r is stripped.
std::vector<std::string> split(const std::string& line);

/// Reads all lines of a CSV file, checks the header matches exactly, and
/// returns the data rows split into fields.
std::vector<std::vector<std::string>> read_table(const std::string& path,
                                                 const std::string& expected_header);

/// Writes text to `path` atomically (tmp file + rename).
void write_file(const std::string& path, const std::string& content);

std::string read_file(const std::string& path);

/// Deterministic formatting for doubles in CSV/JSON output (%.10g).
std::string fmt(double v);

} // namespace exnet::csv
