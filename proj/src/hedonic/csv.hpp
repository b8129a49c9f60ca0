#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hedonic {

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

// RFC-4180-ish reader: quoted fields, "" escapes, CRLF tolerated.
// Throws Error(Io) if the file cannot be opened.
CsvTable read_csv(const std::string& path);

// Quotes only when the field needs it.
std::string csv_escape(std::string_view field);
std::string csv_join(const std::vector<std::string>& fields);

// Shortest round-trip decimal form (std::to_chars).
std::string format_double(double v);

std::optional<double> parse_double(std::string_view s);
std::optional<long long> parse_int(std::string_view s);

// ISO-8601 calendar date -> days since 1970-01-01, and back.
std::optional<std::int32_t> parse_iso_date_days(std::string_view s);
std::string format_iso_date(std::int32_t days);

std::string read_file(const std::string& path);

// Write-temp-then-rename so partially written outputs are never observed.
void write_file_atomic(const std::string& path, std::string_view content);

}  // namespace hedonic
