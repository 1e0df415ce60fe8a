#pragma once

#include <fstream>
#include <sstream>

#include "column.hpp"

namespace tjoin {

// RFC 4180 CSV, UTF-8. The first record is always a header.

struct CsvError : std::runtime_error {
  size_t line;
  CsvError(size_t line_no, const std::string& what)
      : std::runtime_error("CSV line " + std::to_string(line_no) + ": " + what), line(line_no) {}
};

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> records;
};

inline CsvTable parse_csv(std::string_view data) {
  CsvTable table;
  std::vector<std::string> record;
  std::string field;
  size_t line = 1;
  bool quoted = false;
  bool seen_any = false;

  auto end_field = [&] {
    record.push_back(std::move(field));
    field.clear();
  };
  auto end_record = [&] {
    end_field();
    if (!seen_any) {
      table.header = std::move(record);
      seen_any = true;
    } else {
      if (record.size() != table.header.size())
        throw CsvError(line, "expected " + std::to_string(table.header.size()) + " fields, got " +
                                 std::to_string(record.size()));
      table.records.push_back(std::move(record));
    }
    record.clear();
  };

  size_t i = 0;
  const size_t n = data.size();
  while (i < n) {
    char c = data[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < n && data[i + 1] == '"') {
          field.push_back('"');
          i += 2;
        } else {
          quoted = false;
          ++i;
          if (i < n && data[i] != ',' && data[i] != '\r' && data[i] != '\n')
            throw CsvError(line, "unexpected character after closing quote");
        }
      } else {
        if (c == '\n') ++line;
        field.push_back(c);
        ++i;
      }
      continue;
    }
    switch (c) {
      case '"':
        if (!field.empty()) throw CsvError(line, "quote inside unquoted field");
        quoted = true;
        ++i;
        break;
      case ',':
        end_field();
        ++i;
        break;
      case '\r':
        if (i + 1 < n && data[i + 1] == '\n') ++i;
        [[fallthrough]];
      case '\n':
        end_record();
        ++line;
        ++i;
        break;
      default:
        field.push_back(c);
        ++i;
    }
  }
  if (quoted) throw CsvError(line, "unterminated quoted field");
  if (!field.empty() || !record.empty()) end_record();
  return table;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return std::move(buf).str();
}

inline void write_file(const std::string& path, std::string_view data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out.write(data.data(), static_cast<std::streamsize>(data.size()));
  if (!out) throw std::runtime_error("failed writing " + path);
}

inline void append_csv_field(std::string& out, std::string_view field) {
  const bool needs_quotes = field.find_first_of(",\"\r\n") != std::string_view::npos;
  if (!needs_quotes) {
    out += field;
    return;
  }
  out += '"';
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
}

inline std::string format_csv_row(const std::vector<std::string>& fields) {
  std::string out;
  for (size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ',';
    append_csv_field(out, fields[i]);
  }
  out += '\n';
  return out;
}

enum class Normalization { none, lowercase };

inline std::u32string normalize(std::u32string text, Normalization norm) {
  if (norm == Normalization::lowercase)
    for (auto& c : text) c = fold_scalar(c);
  return text;
}

/// Loads one column of a CSV file as a table: rows get ids in file order and
/// the requested normalization is applied. The column selector is a header
/// name, or a 0-based index when no header matches and the selector is numeric.
inline ColumnTable ingest(const std::string& path, const std::string& column, Normalization norm) {
  const CsvTable csv = parse_csv(read_file(path));

  size_t col = csv.header.size();
  for (size_t i = 0; i < csv.header.size(); ++i) {
    if (csv.header[i] == column) {
      col = i;
      break;
    }
  }
  if (col == csv.header.size() && !column.empty() &&
      column.find_first_not_of("0123456789") == std::string::npos) {
    const size_t idx = std::stoul(column);
    if (idx < csv.header.size()) col = idx;
  }
  if (col == csv.header.size()) {
    std::string names;
    for (size_t i = 0; i < csv.header.size(); ++i) {
      if (i) names += ", ";
      names += "\"" + csv.header[i] + "\"";
    }
    throw std::runtime_error("column \"" + column + "\" not found in " + path +
                             "; available columns: " + names);
  }

  std::vector<Row> rows;
  rows.reserve(csv.records.size());
  for (size_t i = 0; i < csv.records.size(); ++i) {
    std::u32string text;
    try {
      text = decode_utf8(csv.records[i][col]);
    } catch (const EncodingError& e) {
      throw CsvError(i + 2, e.what());
    }
    rows.push_back(Row{static_cast<int32_t>(i), normalize(std::move(text), norm)});
  }
  return ColumnTable(std::move(rows));
}

}  // namespace tjoin
