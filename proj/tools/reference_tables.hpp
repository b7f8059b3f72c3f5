#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace coinrace::tables {

struct Instance {
  std::int64_t n;
  std::int64_t alpha;
  std::int64_t beta;
};

struct PolynomialTable {
  int id;
  std::int64_t alpha;
  std::int64_t beta;
  std::vector<std::int64_t> ns;
};

/// Parameter sets of the five published advantage-polynomial tables.
inline const std::vector<PolynomialTable>& polynomial_tables() {
  static const std::vector<PolynomialTable> tables = [] {
    auto range = [](std::int64_t step) {
      std::vector<std::int64_t> v;
      for (std::int64_t i = 1; i <= 12; ++i) v.push_back(i * step);
      return v;
    };
    return std::vector<PolynomialTable>{
        {1, 1, 1, range(1)}, {2, 1, 2, range(1)}, {3, 2, 1, range(2)}, {4, 2, 3, range(2)}, {5, 3, 2, range(3)},
    };
  }();
  return tables;
}

struct MinimizedRow {
  Instance game;
  std::string note;  // non-empty for rows whose published values look corrupted
};

/// Rows of the published minimized-advantage table.
inline const std::vector<MinimizedRow>& minimized_rows() {
  static const std::vector<MinimizedRow> rows{
      {{5, 1, 1}, ""},   {{10, 1, 1}, ""}, {{15, 1, 1}, ""}, {{5, 1, 2}, ""},  {{10, 1, 2}, ""}, {{15, 1, 2}, ""},
      {{5, 1, 3}, ""},   {{10, 1, 3}, ""}, {{15, 1, 3}, ""}, {{10, 2, 1}, ""}, {{20, 2, 1}, ""}, {{30, 2, 1}, ""},
      {{10, 2, 3}, ""},
      {{20, 2, 3}, "published row repeats the (20,2,1) values"},
      {{30, 2, 3}, "published I(p_n*) out of trend"},
      {{15, 3, 2}, "published gap between columns suspect"},
      {{30, 3, 2}, ""},  {{45, 3, 2}, ""},
  };
  return rows;
}

}  // namespace coinrace::tables
