#include <cycaut/autgroup.hpp>
#include <cycaut/codes.hpp>

#include "cycaut_cli/cli.hpp"

namespace cycaut::cli {

namespace {

Table2Row row(u64 q, u64 p, u64 delta, const std::string (&names)[3]) {
  Table2Row r{q, p, delta, {names[0], names[1], names[2]}, {}};
  for (int b = 0; b < 3; ++b) {
    const std::string& name = names[b];
    if (name == "S_" + std::to_string(p)) {
      r.expected_order[b] = factorial(p);
    } else if (name == "M_23") {
      r.expected_order[b] = 10'200'960;
    } else if (name == "PGammaL(3,3)") {
      r.expected_order[b] = 5616;
    } else if (name == "C_" + std::to_string(p)) {
      r.expected_order[b] = p;
    } else {
      // C_k x| C_p
      r.expected_order[b] = BigInt(std::stoull(name.substr(2))) * p;
    }
  }
  return r;
}

}  // namespace

const std::vector<Table2Row>& table2_rows() {
  static const std::vector<Table2Row> rows = [] {
    std::vector<Table2Row> v;
    v.push_back(row(2, 17, 2, {"C_8 x| C_17", "S_17", "S_17"}));
    v.push_back(row(2, 23, 3, {"M_23", "M_23", "M_23"}));
    v.push_back(row(2, 41, 2, {"C_20 x| C_41", "C_20 x| C_41", "C_20 x| C_41"}));
    v.push_back(row(2, 41, 3, {"C_20 x| C_41", "S_41", "S_41"}));
    v.push_back(row(2, 43, 5, {"C_14 x| C_43", "C_14 x| C_43", "C_14 x| C_43"}));
    v.push_back(row(2, 43, 7, {"C_14 x| C_43", "S_43", "S_43"}));
    v.push_back(row(3, 13, 2, {"C_3 x| C_13", "C_3 x| C_13", "C_3 x| C_13"}));
    v.push_back(row(3, 13, 4, {"PGammaL(3,3)", "C_3 x| C_13", "C_3 x| C_13"}));
    v.push_back(row(3, 13, 5, {"C_3 x| C_13", "C_3 x| C_13", "C_3 x| C_13"}));
    v.push_back(row(3, 23, 3, {"C_11 x| C_23", "C_11 x| C_23", "C_11 x| C_23"}));
    v.push_back(row(3, 41, 5, {"C_8 x| C_41", "C_8 x| C_41", "C_8 x| C_41"}));
    v.push_back(row(4, 43, 9, {"C_7 x| C_43", "S_43", "S_43"}));
    v.push_back(row(5, 11, 5, {"C_5 x| C_11", "C_5 x| C_11", "C_5 x| C_11"}));
    v.push_back(row(11, 5, 3, {"C_5", "C_2 x| C_5", "C_5"}));
    return v;
  }();
  return rows;
}

std::vector<Table2Cell> compute_table2() {
  std::vector<Table2Cell> cells;
  for (const auto& r : table2_rows()) {
    const auto field = Field::of_order(r.q);
    for (u64 b = 1; b <= 3; ++b) {
      const auto code = CyclicCode::bch(r.p, field, b, r.delta);
      const auto c = classify(code);
      cells.push_back({r.q, r.p, r.delta, b, r.expected_name[b - 1], r.expected_order[b - 1], c.name(), c.order});
    }
  }
  return cells;
}

}  // namespace cycaut::cli
