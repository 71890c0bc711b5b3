#pragma once

#include <cstdint>

#include "moonexp/qseries.hpp"

namespace moonexp {

// f | U_N: c_n(f|U_N) = c_{nN}(f). Precision floor(f.prec / N).
QSeries u_operator(const QSeries& f, std::int64_t level);

// f | V_N: the substitution q -> q^N. Precision N * f.prec.
QSeries v_operator(const QSeries& f, std::int64_t level);

// Outcome of expressing a series as a polynomial in J_1.
struct PolyFit {
  IntPoly poly;
  bool residual_ok = false;
  // Exponents on which f - poly(J_1) was checked.
  Window residual_window;
  // f - poly(J_1) on its full known window.
  QSeries residual;
};

/**
 * Finds the integer polynomial P matching the principal part and constant
 * term of f against powers of J_1, then checks that f - P(J_1) vanishes on
 * the positive exponents of check_window. A fit that fails the check is
 * reported through residual_ok, not thrown.
 *
 * Throws PrecisionError if f is not known through q^0 or through
 * check_window.last.
 */
PolyFit fit_polynomial_in_j1(const QSeries& f, Window check_window);

}  // namespace moonexp
