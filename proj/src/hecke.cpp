#include "moonexp/hecke.hpp"

#include <algorithm>
#include <string>

#include "moonexp/arith.hpp"
#include "moonexp/errors.hpp"
#include "moonexp/etaforms.hpp"

namespace moonexp {

QSeries u_operator(const QSeries& f, std::int64_t level) {
  if (level < 1) throw DomainError("u_operator: level must be >= 1");
  const std::int64_t prec = floor_div(f.prec(), level);
  if (f.is_zero()) return QSeries::zero(prec);
  const std::int64_t lo = ceil_div(f.lo(), level);
  if (lo >= prec) return QSeries::zero(prec);
  std::vector<mpz_class> out(static_cast<std::size_t>(prec - lo));
  for (std::int64_t n = lo; n < prec; ++n) {
    out[static_cast<std::size_t>(n - lo)] =
        f.coeffs()[static_cast<std::size_t>(n * level - f.lo())];
  }
  return QSeries(lo, std::move(out), prec);
}

QSeries v_operator(const QSeries& f, std::int64_t level) {
  if (level < 1) throw DomainError("v_operator: level must be >= 1");
  const std::int64_t prec = f.prec() * level;
  if (f.is_zero()) return QSeries::zero(prec);
  const std::int64_t lo = f.lo() * level;
  std::vector<mpz_class> out(static_cast<std::size_t>(prec - lo));
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    out[i * static_cast<std::size_t>(level)] = f.coeffs()[i];
  }
  return QSeries(lo, std::move(out), prec);
}

PolyFit fit_polynomial_in_j1(const QSeries& f, Window check_window) {
  if (f.prec() <= 0) {
    throw PrecisionError("insufficient precision to determine the polynomial: series known to O(q^" +
                         std::to_string(f.prec()) + ")");
  }
  if (check_window.last >= f.prec()) {
    throw PrecisionError("insufficient precision: check window ends at q^" +
                         std::to_string(check_window.last) + " but the series is known to O(q^" +
                         std::to_string(f.prec()) + ")");
  }
  const int degree = f.is_zero() ? 0 : static_cast<int>(std::max<std::int64_t>(-f.lo(), 0));
  // J_1^k loses one unit of precision per factor.
  const QSeries j = j1_series(f.prec() + std::max(degree - 1, 0));
  std::vector<QSeries> powers{QSeries::constant(1, j.prec()), j};
  for (int k = 2; k <= degree; ++k) powers.push_back(series_mul(powers.back(), j));

  std::vector<mpz_class> coeffs(static_cast<std::size_t>(degree) + 1);
  QSeries residual = f;
  for (int k = degree; k >= 1; --k) {
    const mpz_class c = residual.coeff(-k);
    if (c == 0) continue;
    coeffs[static_cast<std::size_t>(k)] = c;
    residual -= c * powers[static_cast<std::size_t>(k)];
  }
  coeffs[0] = residual.coeff(0);
  residual = residual.add_constant(-coeffs[0]);
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();

  PolyFit fit;
  fit.poly = IntPoly{std::move(coeffs)};
  fit.residual_window = Window{std::max<std::int64_t>(check_window.first, 1), check_window.last};
  fit.residual_ok = true;
  for (std::int64_t n = fit.residual_window.first; n <= fit.residual_window.last; ++n) {
    if (residual.coeff(n) != 0) {
      fit.residual_ok = false;
      break;
    }
  }
  fit.residual = std::move(residual);
  return fit;
}

}  // namespace moonexp
