#pragma once

#include <cstdint>

#include "moonexp/qseries.hpp"

namespace moonexp {

// Exponent data of the eta quotient t_N = eta(tau)^d / eta(N tau)^d.
struct EtaParams {
  std::int64_t level = 0;
  // Least d > 0 with d(N-1) = 0 mod 24 and N^d a square.
  std::int64_t d = 0;
  // Pole order d(N-1)/24 at the infinite cusp.
  std::int64_t n = 0;
};

EtaParams eta_quotient_params(std::int64_t level);

// prod_{n>0} (1 - q^n) + O(q^prec), from the pentagonal number theorem.
QSeries eta_unit_series(std::int64_t prec);

// prod_{n>0} (1 - q^n)^power + O(q^prec).
QSeries eta_unit_power(unsigned power, std::int64_t prec);

// E_4 = 1 + 240 sum sigma_3(n) q^n.
QSeries e4_series(std::int64_t prec);

// Delta = q prod (1 - q^n)^24.
QSeries delta_series(std::int64_t prec);

/**
 * J_1 = j - 744 = q^-1 + 196884 q + ... + O(q^prec).
 *
 * Built as E_4^3 / Delta - 744, then checked against Delta * j = E_4^3; a
 * mismatch throws InternalError. The largest expansion computed so far is
 * memoised (guarded by a mutex) and shorter requests are truncations of it.
 */
QSeries j1_series(std::int64_t prec);

// t_N to O(q^prec); lo = -n_N.
QSeries tn_series(std::int64_t level, std::int64_t prec);

// Normalised Hauptmodul J_N = t_N + d_N of Gamma_0(N) for N = p or p^2 when
// N - 1 divides 24, the zero series otherwise. Throws DomainError if N is not
// a prime or a prime square.
QSeries hauptmodul_jn(std::int64_t level, std::int64_t prec);

// s_N = N^{d/2} / t_N, the image of t_N under the Fricke involution.
QSeries sn_series(std::int64_t level, std::int64_t prec);

// J_{N+} = J_N + s_N for N - 1 dividing 24. Throws DomainError
// ("construction not a Hauptmodul at this level") otherwise.
QSeries jn_plus_series(std::int64_t level, std::int64_t prec);

// Monic integer polynomial Phi_m with Phi_m(J_1) = q^-m + O(q).
struct FaberPoly {
  int m = 0;
  IntPoly poly;
};

// Eliminates principal part and constant term of J_1^m against lower powers
// of J_1, top degree first; every pivot is 1. prec (>= m + 2) is the J_1
// precision used.
FaberPoly faber_poly(int m, std::int64_t prec);
FaberPoly faber_poly(int m);

}  // namespace moonexp
