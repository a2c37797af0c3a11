#include "doctest.h"

#include "xxff/xxchain/ed_oracle.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#ifndef XXFF_GOLDEN_DIR
#error "XXFF_GOLDEN_DIR must point at tests/golden"
#endif

namespace {

struct Row {
  int L, M;
  std::string id;
  double abs2;
};

std::vector<Row> read_golden(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::string line;
  std::getline(in, line);
  REQUIRE(line == "L,M,state_id,abs2");
  std::vector<Row> rows;
  while (std::getline(in, line) && !line.empty()) {
    std::stringstream ss(line);
    std::string l, m, id, v;
    std::getline(ss, l, ',');
    std::getline(ss, m, ',');
    std::getline(ss, id, ',');
    std::getline(ss, v, ',');
    rows.push_back({std::stoi(l), std::stoi(m), id, std::stod(v)});
  }
  return rows;
}

}  // namespace

TEST_CASE("ED golden table matches the committed file") {
  const auto golden = read_golden(std::string(XXFF_GOLDEN_DIR) + "/ed_formfactors.csv");
  const auto rows = xxff::xxchain::ed_golden_table({4, 6, 8});
  REQUIRE(rows.size() == golden.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CAPTURE(i);
    CHECK(rows[i].L == golden[i].L);
    CHECK(rows[i].M == golden[i].M);
    CHECK(rows[i].state_id == golden[i].id);
    CHECK(std::fabs(rows[i].abs2 - golden[i].abs2) <= 1e-12);
  }
}
