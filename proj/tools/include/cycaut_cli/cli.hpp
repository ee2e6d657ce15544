#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <cycaut/autgroup.hpp>

namespace cycaut::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kNegative = 1;  // not equivalent, or a table mismatch
inline constexpr int kParseError = 2;
inline constexpr int kUnsupported = 3;  // unsupported length or cap exceeded

/// Runs the command line `args` (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct Table2Row {
  u64 q;
  u64 p;
  u64 delta;
  /// Expected group for b = 1, 2, 3.
  std::string expected_name[3];
  BigInt expected_order[3];
};

struct Table2Cell {
  u64 q, p, delta, b;
  std::string expected_name;
  BigInt expected_order;
  std::string computed_name;
  BigInt computed_order;
  bool match() const { return computed_name == expected_name && computed_order == expected_order; }
};

/// The 14 reference rows (narrow sense and b = 2, 3).
const std::vector<Table2Row>& table2_rows();
/// Classifies every cell of the table.
std::vector<Table2Cell> compute_table2();

}  // namespace cycaut::cli
