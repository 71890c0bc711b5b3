#include "moonexp/deligne.hpp"

#include <algorithm>
#include <string>

#include "moonexp/arith.hpp"
#include "moonexp/congruence.hpp"
#include "moonexp/errors.hpp"
#include "moonexp/etaforms.hpp"
#include "moonexp/hecke.hpp"
#include "moonexp/supersingular.hpp"

namespace moonexp {

QSeries p_j1_up(std::int64_t p, std::int64_t prec) {
  if (!is_prime(p)) throw DomainError("p_j1_up: " + std::to_string(p) + " is not prime");
  if (prec < 1) throw DomainError("p_j1_up: prec must be >= 1");
  const QSeries direct = mpz_class(p) * u_operator(j1_series(p * prec), p);

  // Phi_p(J_1) loses p - 1 units of precision in Horner's scheme.
  const QSeries j_short = j1_series(prec + p);
  const QSeries faber = poly_eval(faber_poly(static_cast<int>(p)).poly, j_short);
  const QSeries via_faber = (faber - v_operator(j_short, p)).truncate(prec);
  if (via_faber != direct) {
    throw InternalError("p_j1_up: p J_1|U_p and Phi_p(J_1) - J_1|V_p differ at p = " +
                        std::to_string(p));
  }
  return direct;
}

Valuation vp_p_j1_up(std::int64_t p, std::int64_t window) {
  if (!is_genus0_plus(p)) {
    throw DomainError("vp_p_j1_up: Gamma_0(" + std::to_string(p) + ")+ has positive genus");
  }
  if (window < 1) throw DomainError("vp_p_j1_up: window must be >= 1");
  const QSeries f = p_j1_up(p, 2 * window + 1);
  const Valuation narrow = vp_min(f, p, Window{1, window});
  const Valuation wide = vp_min(f, p, Window{1, 2 * window});
  if (!(narrow == wide)) {
    throw PrecisionError("precision insufficient: v_p(p J_1|U_p) moved from " +
                         narrow.to_string() + " to " + wide.to_string() +
                         " when the window doubled (p = " + std::to_string(p) + ")");
  }
  return narrow;
}

const char* to_string(SsClass cls) {
  switch (cls) {
    case SsClass::Minus744: return "-744";
    case SsClass::C984: return "984";
    case SsClass::Other: return "other";
  }
  return "?";
}

std::int64_t a_n_valuation_bound(SsClass cls, std::int64_t p, std::int64_t n) {
  const std::int64_t c = cls == SsClass::Minus744 ? 3 : cls == SsClass::C984 ? 2 : 1;
  return ceil_div(c * n * p + 1, p + 1);
}

std::int64_t DeligneFit::a_valuation(std::int64_t alpha, std::int64_t n) const {
  const mpz_class& a = A.at({alpha, n});
  if (a == 0) return K;
  return std::min(vp(a, p), K);
}

bool DeligneFit::bounds_ok() const {
  for (const auto& [alpha, cls] : lifts) {
    for (std::int64_t n = 1; n <= nmax; ++n) {
      const std::int64_t bound = a_n_valuation_bound(cls, p, n);
      if (bound < K && a_valuation(alpha, n) < bound) return false;
    }
  }
  return true;
}

namespace {

// (J_1 - alpha)^{-n} for n = 1..nmax, each to O(q^prec).
std::vector<QSeries> inverse_powers(std::int64_t alpha, std::int64_t nmax, std::int64_t prec) {
  const QSeries shifted = j1_series(prec).add_constant(-alpha);
  const QSeries w = series_inv(shifted).truncate(prec);
  std::vector<QSeries> out{w};
  for (std::int64_t n = 2; n <= nmax; ++n) out.push_back(series_mul(out.back(), w).truncate(prec));
  return out;
}

std::vector<std::pair<std::int64_t, SsClass>> classified_lifts(std::int64_t p) {
  const SupersingularData data = ss_j_set(p);
  const auto reduce = [p](std::int64_t x) { return ((x % p) + p) % p; };
  std::vector<std::pair<std::int64_t, SsClass>> out;
  for (const std::int64_t j : data.s1) {
    const std::int64_t alpha = reduce(j - 744);
    SsClass cls = SsClass::Other;
    if (alpha == reduce(-744)) cls = SsClass::Minus744;
    else if (alpha == reduce(984)) cls = SsClass::C984;
    out.emplace_back(alpha, cls);
  }
  std::sort(out.begin(), out.end());
  return out;
}

mpz_class reduce_mod(const mpz_class& x, const mpz_class& modulus) {
  mpz_class r;
  mpz_mod(r.get_mpz_t(), x.get_mpz_t(), modulus.get_mpz_t());
  return r;
}

std::int64_t min_valuation(const mpz_class& x, std::int64_t p, std::int64_t cap) {
  return x == 0 ? cap : std::min(vp(x, p), cap);
}

}  // namespace

DeligneFit fit_partial_fractions(std::int64_t p, std::int64_t K, std::int64_t nmax) {
  if (p <= 3 || !is_genus0_plus(p)) {
    throw DomainError("fit_partial_fractions: need p > 3 with Gamma_0(p)+ of genus zero");
  }
  if (K < 2) throw DomainError("fit_partial_fractions: K must be >= 2");
  if (nmax < K + 2) throw DomainError("fit_partial_fractions: need nmax >= K + 2");

  DeligneFit fit;
  fit.p = p;
  fit.K = K;
  fit.nmax = nmax;
  fit.lifts = classified_lifts(p);
  const auto unknowns = static_cast<std::int64_t>(fit.lifts.size()) * nmax;
  fit.window = unknowns + 10;
  const std::int64_t prec = fit.window + 1;

  mpz_class modulus;
  mpz_ui_pow_ui(modulus.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(K));

  const QSeries target = -p_j1_up(p, prec);
  std::vector<std::vector<QSeries>> basis;
  for (const auto& [alpha, cls] : fit.lifts) basis.push_back(inverse_powers(alpha, nmax, prec));

  // Augmented matrix: row m-1 holds the q^m equation.
  const auto rows = static_cast<std::size_t>(fit.window);
  const auto cols = static_cast<std::size_t>(unknowns);
  std::vector<std::vector<mpz_class>> mat(rows, std::vector<mpz_class>(cols + 1));
  for (std::size_t r = 0; r < rows; ++r) {
    const auto m = static_cast<std::int64_t>(r) + 1;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      for (std::int64_t n = 1; n <= nmax; ++n) {
        const std::size_t c = i * static_cast<std::size_t>(nmax) + static_cast<std::size_t>(n - 1);
        mat[r][c] = reduce_mod(basis[i][static_cast<std::size_t>(n - 1)].coeff(m), modulus);
      }
    }
    mat[r][cols] = reduce_mod(target.coeff(m), modulus);
  }

  std::size_t rank = 0;
  std::vector<std::size_t> pivot_row(cols);
  mpz_class inv;
  mpz_class factor;
  for (std::size_t c = 0; c < cols; ++c) {
    std::size_t best = rows;
    std::int64_t best_v = K;
    for (std::size_t r = rank; r < rows; ++r) {
      const std::int64_t v = min_valuation(mat[r][c], p, K);
      if (v < best_v) {
        best_v = v;
        best = r;
        if (v == 0) break;
      }
    }
    if (best == rows || best_v > 0) {
      throw DeligneFitError("fit_partial_fractions: no unit pivot for unknown " +
                                std::to_string(c) + " at p = " + std::to_string(p),
                            0);
    }
    std::swap(mat[rank], mat[best]);
    mpz_invert(inv.get_mpz_t(), mat[rank][c].get_mpz_t(), modulus.get_mpz_t());
    for (auto& x : mat[rank]) x = reduce_mod(x * inv, modulus);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || mat[r][c] == 0) continue;
      factor = mat[r][c];
      for (std::size_t k = c; k <= cols; ++k) {
        mat[r][k] = reduce_mod(mat[r][k] - factor * mat[rank][k], modulus);
      }
    }
    pivot_row[c] = rank;
    ++rank;
  }

  for (std::size_t i = 0; i < fit.lifts.size(); ++i) {
    for (std::int64_t n = 1; n <= nmax; ++n) {
      const std::size_t c = i * static_cast<std::size_t>(nmax) + static_cast<std::size_t>(n - 1);
      fit.A[{fit.lifts[i].first, n}] = mat[pivot_row[c]][cols];
    }
  }

  QSeries residual = -target;
  for (std::size_t i = 0; i < fit.lifts.size(); ++i) {
    for (std::int64_t n = 1; n <= nmax; ++n) {
      residual += fit.A.at({fit.lifts[i].first, n}) * basis[i][static_cast<std::size_t>(n - 1)];
    }
  }
  fit.residual_valuation = vp_min(residual, p, Window{1, fit.window});
  if (!fit.residual_valuation.is_infinite() && fit.residual_valuation.value() < K) {
    throw DeligneFitError("fit_partial_fractions: residual valuation " +
                              fit.residual_valuation.to_string() + " < K = " + std::to_string(K) +
                              " at p = " + std::to_string(p),
                          fit.residual_valuation.value());
  }
  return fit;
}

DeligneFit fit_partial_fractions(std::int64_t p, std::int64_t K) {
  return fit_partial_fractions(p, K, K + 2);
}

std::int64_t max_fittable_precision(std::int64_t p, std::int64_t k_max) {
  for (std::int64_t k = k_max; k >= 2; --k) {
    try {
      fit_partial_fractions(p, k);
      return k;
    } catch (const DeligneFitError&) {
    }
  }
  return 0;
}

std::vector<A1Check> check_a1_valuations(const DeligneFit& fit) {
  std::vector<A1Check> out;
  for (const auto& [alpha, cls] : fit.lifts) {
    A1Check check;
    check.alpha = alpha;
    check.cls = cls;
    check.valuation = fit.a_valuation(alpha, 1);
    check.expected = cls == SsClass::Minus744 ? 3 : cls == SsClass::C984 ? 2 : 1;
    check.ok = check.valuation == check.expected && check.expected < fit.K;
    out.push_back(check);
  }
  return out;
}

std::vector<A1Check> check_a1_valuations(std::int64_t p) {
  return check_a1_valuations(fit_partial_fractions(p));
}

namespace {

Valuation truncated_residual(const DeligneFit& fit, bool include_984, std::int64_t other_nmax) {
  const std::int64_t prec = fit.window + 1;
  QSeries residual = p_j1_up(fit.p, prec);
  for (const auto& [alpha, cls] : fit.lifts) {
    std::int64_t upto = 0;
    if (cls == SsClass::Other) upto = other_nmax;
    if (cls == SsClass::C984 && include_984) upto = 1;
    if (upto == 0) continue;
    const auto powers = inverse_powers(alpha, upto, prec);
    for (std::int64_t n = 1; n <= upto; ++n) {
      residual += fit.A.at({alpha, n}) * powers[static_cast<std::size_t>(n - 1)];
    }
  }
  return vp_min(residual, fit.p, Window{1, fit.window});
}

}  // namespace

Valuation congruence_mod_p2_residual(const DeligneFit& fit) {
  return truncated_residual(fit, false, 1);
}

Valuation congruence_mod_p3_residual(const DeligneFit& fit) {
  return truncated_residual(fit, true, 2);
}

}  // namespace moonexp
