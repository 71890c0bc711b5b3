#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "moonexp/qseries.hpp"

namespace moonexp {

// p J_1 | U_p to O(q^prec). Computed from the coefficients of J_1 and again
// as Phi_p(J_1) - J_1 | V_p; the two must agree exactly (InternalError
// otherwise).
QSeries p_j1_up(std::int64_t p, std::int64_t prec);

// v_p(p J_1 | U_p) over q^1..q^window, required to be unchanged over
// q^1..q^{2 window} (PrecisionError "precision insufficient" otherwise).
// Requires Gamma_0(p)+ of genus zero.
Valuation vp_p_j1_up(std::int64_t p, std::int64_t window);

// Residue class of a supersingular J_1-value relative to the two special
// values -744 (j = 0) and 984 (j = 1728).
enum class SsClass { Minus744, C984, Other };

const char* to_string(SsClass cls);

// Lower bound on v_p(A_n) for the class: ceil((c n p + 1) / (p + 1)) with
// c = 3, 2, 1.
std::int64_t a_n_valuation_bound(SsClass cls, std::int64_t p, std::int64_t n);

/**
 * Partial-fraction fit of p J_1 | U_p = -sum_alpha sum_n A_n (J_1 - alpha)^-n
 * modulo p^K, with lifts alpha in [0, p) and n <= nmax.
 */
struct DeligneFit {
  std::int64_t p = 0;
  std::int64_t K = 0;
  std::int64_t nmax = 0;
  // Equations matched: q^1 .. q^window.
  std::int64_t window = 0;
  // Lifts in [0, p), ascending, with their classes.
  std::vector<std::pair<std::int64_t, SsClass>> lifts;
  // (alpha, n) -> A_n(alpha) reduced into [0, p^K).
  std::map<std::pair<std::int64_t, std::int64_t>, mpz_class> A;
  // v_p of p J_1|U_p + sum A_n (J_1 - alpha)^-n over the window.
  Valuation residual_valuation = Valuation::infinite();

  // v_p(A_n(alpha)), capped at K when the residue is zero.
  std::int64_t a_valuation(std::int64_t alpha, std::int64_t n) const;
  // Every fitted A_n whose bound is below K meets its bound.
  bool bounds_ok() const;
};

class DeligneFitError : public std::runtime_error {
 public:
  DeligneFitError(const std::string& what, std::int64_t best_residual_valuation)
      : std::runtime_error(what), best_residual_valuation_(best_residual_valuation) {}
  std::int64_t best_residual_valuation() const { return best_residual_valuation_; }

 private:
  std::int64_t best_residual_valuation_;
};

// Solves the overdetermined system (#unknowns + 10 equations) over Z/p^K with
// minimal-valuation pivoting. Requires p > 3, Gamma_0(p)+ of genus zero and
// nmax >= K + 2. Throws DeligneFitError when the residual valuation is < K.
DeligneFit fit_partial_fractions(std::int64_t p, std::int64_t K, std::int64_t nmax);
DeligneFit fit_partial_fractions(std::int64_t p, std::int64_t K = 4);

// Largest K in [2, k_max] for which the canonical-lift fit succeeds, or 0.
std::int64_t max_fittable_precision(std::int64_t p, std::int64_t k_max);

// Per-class v_p(A_1) against the expected 3 / 2 / 1.
struct A1Check {
  std::int64_t alpha = 0;
  SsClass cls = SsClass::Other;
  std::int64_t valuation = 0;
  std::int64_t expected = 0;
  bool ok = false;
};

std::vector<A1Check> check_a1_valuations(const DeligneFit& fit);
std::vector<A1Check> check_a1_valuations(std::int64_t p);

// v_p of p J_1|U_p + (the truncated partial-fraction sums) over the fit's
// window: with only the n = 1 terms of the "other" classes (expected >= 2),
// and with the 984-class n = 1 term plus "other" n <= 2 terms (expected >= 3).
Valuation congruence_mod_p2_residual(const DeligneFit& fit);
Valuation congruence_mod_p3_residual(const DeligneFit& fit);

}  // namespace moonexp
