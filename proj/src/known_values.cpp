#include "moonexp/known_values.hpp"

#include <algorithm>
#include <map>

namespace moonexp::known {

namespace {

const std::map<std::int64_t, std::int64_t>& exponents() {
  static const std::map<std::int64_t, std::int64_t> table{
      {2, 46}, {3, 20}, {5, 9},  {7, 6},  {11, 2}, {13, 3}, {17, 1}, {19, 1},
      {23, 1}, {29, 1}, {31, 1}, {41, 1}, {47, 1}, {59, 1}, {71, 1}};
  return table;
}

}  // namespace

std::int64_t monster_exponent(std::int64_t p) {
  const auto it = exponents().find(p);
  return it == exponents().end() ? 0 : it->second;
}

const std::vector<std::int64_t>& monster_primes() {
  static const std::vector<std::int64_t> primes = [] {
    std::vector<std::int64_t> out;
    for (const auto& [p, e] : exponents()) out.push_back(p);
    return out;
  }();
  return primes;
}

const std::vector<LevelRow>& level_table() {
  // 2^16*3, 2*3^9*5, 3^2*5^5*7, 2*7^4*41, 5*13^2*233, 2^8*769, 2^2*3^3*1823.
  static const std::vector<LevelRow> rows{
      {2, 24, mpz_class(196608)}, {3, 12, mpz_class(196830)}, {5, 6, mpz_class(196875)},
      {7, 4, mpz_class(196882)},  {13, 2, mpz_class(196885)}, {4, 8, mpz_class(196864)},
      {9, 3, mpz_class(196884)},  {25, 1, mpz_class(196885)}};
  return rows;
}

std::optional<LevelRow> level_row(std::int64_t level) {
  for (const auto& row : level_table()) {
    if (row.level == level) return row;
  }
  return std::nullopt;
}

const std::vector<SsJ1Row>& ss_j1_rows() {
  static const std::vector<SsJ1Row> rows{
      {2, 0, 0, {}},
      {3, 0, 0, {}},
      {5, 1, std::nullopt, {}},
      {7, std::nullopt, 4, {}},
      {11, 4, 5, {}},
      {13, std::nullopt, std::nullopt, {2}},
      {17, 4, std::nullopt, {12}},
      {19, std::nullopt, 15, {4}},
      {23, 15, 18, {11}},
      {29, 10, std::nullopt, {6, 12}},
      {31, std::nullopt, 23, {2, 4}},
      {41, 35, std::nullopt, {22, 26, 38}},
      {47, 8, 44, {5, 17, 18}},
      {59, 23, 40, {11, 12, 38, 51}},
      {71, 37, 61, {6, 7, 14, 32, 54}},
  };
  return rows;
}

std::optional<SsJ1Row> ss_j1_row(std::int64_t p) {
  for (const auto& row : ss_j1_rows()) {
    if (row.p == p) return row;
  }
  return std::nullopt;
}

std::optional<int> min_aut_order(std::int64_t p) {
  switch (p) {
    case 2: return 24;
    case 3: return 12;
    case 5: return 6;
    case 7:
    case 11: return 4;
    case 13: case 17: case 19: case 23: case 29:
    case 31: case 41: case 47: case 59: case 71: return 2;
    default: return std::nullopt;
  }
}

}  // namespace moonexp::known
