#include "ptmm/csv.hpp"

#include <cstdio>
#include <cstdlib>
#include <stdexcept>

namespace ptmm {

namespace {

void append_number(std::string& out, double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.12g", value);
  out += buffer;
}

}  // namespace

std::string write_csv(const Table& table) {
  std::string out;
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    if (i != 0) {
      out += ',';
    }
    out += table.columns[i];
  }
  out += '\n';
  for (const std::vector<double>& row : table.rows) {
    if (row.size() != table.columns.size()) {
      throw std::invalid_argument("row width does not match header");
    }
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i != 0) {
        out += ',';
      }
      append_number(out, row[i]);
    }
    out += '\n';
  }
  return out;
}

Table parse_csv(std::string_view text) {
  Table table;
  std::size_t pos = 0;
  bool header = true;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) {
      eol = text.size();
    }
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    if (line.empty()) {
      continue;
    }
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = line.find(',', start);
      if (comma == std::string_view::npos) {
        fields.push_back(line.substr(start));
        break;
      }
      fields.push_back(line.substr(start, comma - start));
      start = comma + 1;
    }
    if (header) {
      for (std::string_view field : fields) {
        table.columns.emplace_back(field);
      }
      header = false;
    } else {
      std::vector<double> row;
      row.reserve(fields.size());
      for (std::string_view field : fields) {
        row.push_back(std::strtod(std::string(field).c_str(), nullptr));
      }
      if (row.size() != table.columns.size()) {
        throw std::invalid_argument("csv row width mismatch");
      }
      table.rows.push_back(std::move(row));
    }
  }
  return table;
}

}  // namespace ptmm
