#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "moonexp/supersingular.hpp"

namespace moonexp::known {

// Exponent of p in the order of the monster group; 0 for other primes.
std::int64_t monster_exponent(std::int64_t p);

// Primes dividing the monster's order, ascending.
const std::vector<std::int64_t>& monster_primes();

// (d_N, c_1(J_1 - J_N)) for the eight levels N > 1 with n_N = 1.
struct LevelRow {
  std::int64_t level;
  std::int64_t d;
  mpz_class c1;
};
const std::vector<LevelRow>& level_table();
std::optional<LevelRow> level_row(std::int64_t level);

// Published supersingular J_1-value rows for the fifteen primes dividing the
// monster's order.
const std::vector<SsJ1Row>& ss_j1_rows();
std::optional<SsJ1Row> ss_j1_row(std::int64_t p);

// Minimum automorphism group order m_p for the same fifteen primes.
std::optional<int> min_aut_order(std::int64_t p);

}  // namespace moonexp::known
