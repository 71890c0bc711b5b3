#include "moonexp/etaforms.hpp"

#include <algorithm>
#include <mutex>
#include <string>

#include "moonexp/arith.hpp"
#include "moonexp/errors.hpp"
#include "moonexp/hecke.hpp"

namespace moonexp {

EtaParams eta_quotient_params(std::int64_t level) {
  if (level < 2) throw DomainError("eta_quotient_params: level must be >= 2");
  const bool level_is_square = mpz_perfect_square_p(mpz_class(level).get_mpz_t()) != 0;
  for (std::int64_t d = 1;; ++d) {
    if ((d * (level - 1)) % 24 != 0) continue;
    if (d % 2 != 0 && !level_is_square) continue;
    return EtaParams{level, d, d * (level - 1) / 24};
  }
}

QSeries eta_unit_series(std::int64_t prec) {
  if (prec < 1) throw DomainError("eta_unit_series: prec must be >= 1");
  std::vector<mpz_class> c(static_cast<std::size_t>(prec));
  // Exponents k(3k-1)/2 for k = 0, 1, -1, 2, -2, ...
  for (std::int64_t k = 0;; ++k) {
    const std::int64_t e1 = k * (3 * k - 1) / 2;
    const std::int64_t e2 = k * (3 * k + 1) / 2;
    if (e1 >= prec) break;
    const int sign = (k % 2 == 0) ? 1 : -1;
    c[static_cast<std::size_t>(e1)] += sign;
    if (k > 0 && e2 < prec) c[static_cast<std::size_t>(e2)] += sign;
  }
  return QSeries(0, std::move(c), prec);
}

QSeries eta_unit_power(unsigned power, std::int64_t prec) {
  const QSeries eta = eta_unit_series(prec);
  if (power == 0) return QSeries::constant(1, prec);
  // eta is sparse, so repeated sparse-by-dense products beat squaring.
  QSeries acc = eta;
  for (unsigned i = 1; i < power; ++i) acc = series_mul(eta, acc);
  return acc;
}

QSeries e4_series(std::int64_t prec) {
  if (prec < 1) throw DomainError("e4_series: prec must be >= 1");
  const auto n = static_cast<std::size_t>(prec);
  std::vector<mpz_class> sigma3(n);
  for (std::size_t d = 1; d < n; ++d) {
    const mpz_class cube = mpz_class(static_cast<unsigned long>(d)) * d * d;
    for (std::size_t m = d; m < n; m += d) sigma3[m] += cube;
  }
  sigma3[0] = 1;
  for (std::size_t m = 1; m < n; ++m) sigma3[m] *= 240;
  return QSeries(0, std::move(sigma3), prec);
}

QSeries delta_series(std::int64_t prec) {
  if (prec < 2) return QSeries::zero(prec);
  return eta_unit_power(24, prec - 1).shift(1);
}

namespace {

QSeries compute_j1(std::int64_t prec) {
  const std::int64_t rel = prec + 1;
  const QSeries e4 = e4_series(rel);
  const QSeries e4_cubed = series_mul(series_mul(e4, e4), e4);
  const QSeries delta = delta_series(rel + 1);
  QSeries j = series_div(e4_cubed, delta);
  if (j.prec() != prec) throw InternalError("j1_series: precision bookkeeping");
  if (series_mul(delta, j) != e4_cubed.truncate(j.prec() + 1)) {
    throw InternalError("j1_series: Delta * j != E4^3");
  }
  return j.add_constant(-744);
}

std::mutex j1_mutex;
QSeries j1_cache;
bool j1_cached = false;

}  // namespace

QSeries j1_series(std::int64_t prec) {
  if (prec < 1) throw DomainError("j1_series: prec must be >= 1");
  {
    std::lock_guard<std::mutex> lock(j1_mutex);
    if (j1_cached && j1_cache.prec() >= prec) return j1_cache.truncate(prec);
  }
  QSeries fresh = compute_j1(prec);
  std::lock_guard<std::mutex> lock(j1_mutex);
  if (!j1_cached || j1_cache.prec() < fresh.prec()) {
    j1_cache = fresh;
    j1_cached = true;
  }
  return fresh;
}

QSeries tn_series(std::int64_t level, std::int64_t prec) {
  const EtaParams ep = eta_quotient_params(level);
  const std::int64_t rel = prec + ep.n;
  if (rel < 1) return QSeries::zero(prec);
  const auto d = static_cast<unsigned>(ep.d);
  const QSeries num = eta_unit_power(d, rel);
  const QSeries den = v_operator(eta_unit_power(d, ceil_div(rel, level)), level).truncate(rel);
  return series_div(num, den).shift(-ep.n);
}

namespace {

bool is_prime_or_prime_square(std::int64_t level) {
  int k = 0;
  return prime_power_base(level, &k) != 0 && (k == 1 || k == 2);
}

mpz_class fricke_scale(const EtaParams& ep) {
  // N^{d/2}; N is a square whenever d is odd.
  mpz_class out;
  if (ep.d % 2 == 0) {
    mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(ep.level),
                  static_cast<unsigned long>(ep.d / 2));
  } else {
    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), mpz_class(ep.level).get_mpz_t());
    mpz_pow_ui(out.get_mpz_t(), root.get_mpz_t(), static_cast<unsigned long>(ep.d));
  }
  return out;
}

}  // namespace

QSeries hauptmodul_jn(std::int64_t level, std::int64_t prec) {
  if (!is_prime_or_prime_square(level)) {
    throw DomainError("hauptmodul_jn: level " + std::to_string(level) +
                      " is not a prime or a prime square");
  }
  if (24 % (level - 1) != 0) return QSeries::zero(prec);
  const EtaParams ep = eta_quotient_params(level);
  return tn_series(level, prec).add_constant(ep.d);
}

QSeries sn_series(std::int64_t level, std::int64_t prec) {
  const EtaParams ep = eta_quotient_params(level);
  // 1/t_N has lo = n, so t_N is needed to relative precision prec - n.
  const QSeries t = tn_series(level, prec - 2 * ep.n);
  return fricke_scale(ep) * series_inv(t);
}

QSeries jn_plus_series(std::int64_t level, std::int64_t prec) {
  if (level < 2 || 24 % (level - 1) != 0) {
    throw DomainError("construction not a Hauptmodul at this level (N = " +
                      std::to_string(level) + ")");
  }
  const EtaParams ep = eta_quotient_params(level);
  return tn_series(level, prec).add_constant(ep.d) + sn_series(level, prec);
}

FaberPoly faber_poly(int m, std::int64_t prec) {
  if (m < 1) throw DomainError("faber_poly: m must be >= 1");
  if (prec < m + 2) throw DomainError("faber_poly: need prec >= m + 2");
  const QSeries j = j1_series(prec);
  std::vector<QSeries> powers{QSeries::constant(1, prec), j};
  for (int k = 2; k <= m; ++k) powers.push_back(series_mul(powers.back(), j));

  std::vector<mpz_class> coeffs(static_cast<std::size_t>(m) + 1);
  coeffs[static_cast<std::size_t>(m)] = 1;
  QSeries residual = powers[static_cast<std::size_t>(m)];
  for (int k = m - 1; k >= 1; --k) {
    const mpz_class c = residual.coeff(-k);
    if (c == 0) continue;
    coeffs[static_cast<std::size_t>(k)] = -c;
    residual -= c * powers[static_cast<std::size_t>(k)];
  }
  coeffs[0] = -residual.coeff(0);
  return FaberPoly{m, IntPoly{std::move(coeffs)}};
}

FaberPoly faber_poly(int m) { return faber_poly(m, m + 2); }

}  // namespace moonexp
