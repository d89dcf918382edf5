#include "hq/csv.hpp"

#include "hq/errors.hpp"
#include "hq/util.hpp"

namespace hq {

CsvTable parse_csv(std::string_view text, bool has_header) {
  CsvTable table;
  std::vector<std::string> row;
  std::string field;
  bool in_quotes = false;
  bool row_has_data = false;

  auto end_field = [&] {
    row.push_back(std::move(field));
    field.clear();
  };
  auto end_row = [&] {
    end_field();
    if (row.size() > 1 || !row[0].empty() || row_has_data) {
      table.rows.push_back(std::move(row));
    }
    row.clear();
    row_has_data = false;
  };

  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        field.push_back(c);
      }
    } else {
      switch (c) {
        case '"':
          if (!field.empty()) throw ParseError("CSV: stray quote inside unquoted field");
          in_quotes = true;
          row_has_data = true;
          break;
        case ',':
          end_field();
          break;
        case '\r':
          break;
        case '\n':
          end_row();
          break;
        default:
          field.push_back(c);
      }
    }
    ++i;
  }
  if (in_quotes) throw ParseError("CSV: unterminated quoted field");
  if (!field.empty() || !row.empty()) end_row();

  if (has_header) {
    if (table.rows.empty()) throw ParseError("CSV: missing header row");
    table.header = table.rows.front();
    table.rows.erase(table.rows.begin());
  }
  return table;
}

CsvTable read_csv(const std::string& path, bool has_header) {
  return parse_csv(read_file(path), has_header);
}

std::string csv_escape(std::string_view field) {
  bool needs_quotes = field.find_first_of(",\"\r\n") != std::string_view::npos;
  if (!needs_quotes) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += "\"\"";
    else out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string csv_join(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out.push_back(',');
    out += csv_escape(fields[i]);
  }
  out.push_back('\n');
  return out;
}

}  // namespace hq
