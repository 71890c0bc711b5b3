#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace moonexp {

// Cusp a/b of Gamma_0(N): b | N, gcd(a, b) = 1, a determined mod
// gcd(b, N/b). The stored a is the least positive integer of its class
// coprime to b.
struct Cusp {
  std::int64_t a = 1;
  std::int64_t b = 1;
  auto operator<=>(const Cusp&) const = default;
};

// One representative per cusp of Gamma_0(N), ordered by b then a.
std::vector<Cusp> cusp_reps(std::int64_t level);

// genus(Gamma_0(p^v)) for v in {1, 2}.
std::int64_t genus_p_power(std::int64_t p, int v);

// Whether Gamma_0(p)+ has genus zero, decided by the emptiness of the
// supersingular locus outside F_p and cross-checked against the primes
// dividing the monster's order (InternalError on disagreement).
bool is_genus0_plus(std::int64_t p);

// Order of vanishing of t_N at the cusp a/b:
// d_N (N/b - b) / (24 gcd(b, N/b)). Negative values are poles.
mpq_class tn_cusp_vanishing_order(std::int64_t level, const Cusp& cusp);

}  // namespace moonexp
