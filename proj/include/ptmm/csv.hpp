#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace ptmm {

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

// One header line plus one line per row, comma separated, LF endings,
// numbers at 12 significant digits.
std::string write_csv(const Table& table);

Table parse_csv(std::string_view text);

}  // namespace ptmm
