#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace hq {

// RFC-4180-ish CSV. Quoted fields may contain commas, doubled quotes and
// newlines; rows are LF or CRLF terminated.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

CsvTable parse_csv(std::string_view text, bool has_header = true);  // throws ParseError
CsvTable read_csv(const std::string& path, bool has_header = true);

std::string csv_escape(std::string_view field);
std::string csv_join(const std::vector<std::string>& fields);

}  // namespace hq
