#pragma once

#include <string>
#include <vector>

namespace augsimp {

// A reference window for one of the named matrices; rows[r][c] is the entry
// (row_lo + r, col_lo + c).
struct ReferenceTable {
  std::string id;
  std::string matrix;
  int row_lo;
  int col_lo;
  std::vector<std::vector<long>> rows;
};

// Reference cells known to disagree with the closed formulas. The suites
// assert the formula value there and report the waiver.
struct TableWaiver {
  std::string group;
  std::string table;
  int row;
  int col;
  long printed;
  std::string reason;
};

const std::vector<ReferenceTable>& reference_tables();
const std::vector<TableWaiver>& table_waivers();

}  // namespace augsimp
