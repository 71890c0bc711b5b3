#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "moonexp/ffield.hpp"

namespace moonexp {

// Supersingular j-invariants in characteristic p, split by field of
// definition. Elements of F_{p^2} are written in the basis {1, t}, t^2 = s,
// of Fp2Field(p).
struct SupersingularData {
  std::int64_t p = 0;
  // j-invariants lying in F_p, ascending in [0, p).
  std::vector<std::int64_t> s1;
  // Frobenius-conjugate pairs outside F_p; each pair has its smaller b first
  // and pairs are sorted by their first element.
  std::vector<std::pair<Fp2Elem, Fp2Elem>> s2;
  // #Aut(E) for every supersingular j.
  std::map<Fp2Elem, int> aut_orders;
  // Minimum automorphism group order.
  int m_p = 0;
  // Whether the point-count oracle confirmed the locus.
  bool oracle_checked = false;

  std::size_t size() const { return s1.size() + 2 * s2.size(); }
};

struct SsOptions {
  // Recompute the locus by exhaustive point counting over F_{p^2} and demand
  // agreement with the Hasse-polynomial route. Costs O(p^4), so it is only
  // run for p <= oracle_max_p.
  bool point_count_oracle = true;
  std::int64_t oracle_max_p = 100;
};

// H_p(x) = sum_{i <= (p-1)/2} binom((p-1)/2, i)^2 x^i mod p, for p > 3.
PolyFp hasse_poly(std::int64_t p);

/**
 * The supersingular locus from the Legendre roots of H_p, mapped through
 * j = 2^8 (x^2 - x + 1)^3 / (x^2 (x - 1)^2).
 *
 * p = 2 and p = 3 are tabulated (j = 0 only, m_2 = 24, m_3 = 12); no
 * characteristic 2 or 3 arithmetic is done. Results are memoised per prime.
 * Throws InternalError if the oracle disagrees.
 */
SupersingularData ss_j_set(std::int64_t p, SsOptions options = {});

// 6 for j = 0, 4 for j = 1728, 2 otherwise (p > 3).
int aut_order(Fp2Elem j, std::int64_t p);

// sum over the locus of 1/#Aut(E).
mpq_class eichler_mass(const SupersingularData& data);

// Supersingular J_1-values j - 744 mod p, split into the columns of the
// classical table for primes with the whole locus in F_p.
struct SsJ1Row {
  std::int64_t p = 0;
  std::optional<std::int64_t> minus744;  // present iff -744 mod p is supersingular
  std::optional<std::int64_t> c984;      // present iff 984 mod p is supersingular
  std::vector<std::int64_t> other;       // ascending

  bool operator==(const SsJ1Row&) const = default;
};

// Throws DomainError unless Gamma_0(p)+ has genus zero.
SsJ1Row ss_j1_table(std::int64_t p);

}  // namespace moonexp
