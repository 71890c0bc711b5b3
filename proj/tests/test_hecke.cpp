#include <random>

#include "doctest.h"
#include "moonexp/errors.hpp"
#include "moonexp/etaforms.hpp"
#include "moonexp/hecke.hpp"

using namespace moonexp;

namespace {

QSeries random_series(std::mt19937_64& rng, std::int64_t lo, std::int64_t prec) {
  std::uniform_int_distribution<int> dist(-1000, 1000);
  std::vector<mpz_class> c(static_cast<std::size_t>(prec - lo));
  for (auto& x : c) x = dist(rng);
  return QSeries(lo, std::move(c), prec);
}

}  // namespace

TEST_CASE("u_operator") {
  const QSeries j = j1_series(40);
  CHECK(u_operator(j, 1) == j);

  const QSeries u2 = u_operator(j, 2);
  CHECK(u2.prec() == 20);
  CHECK(u2.coeff(1) == 21493760);
  CHECK(u2.coeff(0) == 0);
  CHECK(u2.lo() >= 0);

  const QSeries u = u_operator(tn_series(25, 500), 5);
  CHECK(u.prec() == 100);
  CHECK(u == QSeries::constant(-1, 100));

  const QSeries f(-7, {1, 2, 3, 4, 5, 6, 7, 8, 9, 10}, 3);
  const QSeries g = u_operator(f, 3);
  CHECK(g.lo() == -2);
  CHECK(g.prec() == 1);
  CHECK(g.coeff(-2) == 2);
  CHECK(g.coeff(-1) == 5);
  CHECK(g.coeff(0) == 8);
}

TEST_CASE("v_operator") {
  CHECK(v_operator(QSeries::monomial(1, -1, 4), 2) == QSeries::monomial(1, -2, 8));

  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 10; ++trial) {
    const QSeries f = random_series(rng, -3, 30);
    CHECK(u_operator(v_operator(f, 7), 7) == f);
  }

  const QSeries v = v_operator(j1_series(10), 5);
  CHECK(v.prec() == 50);
  CHECK(v.coeff(0) == 0);
  CHECK(v.coeff(5) == 196884);
  CHECK(v.coeff(4) == 0);
}

TEST_CASE("linearity") {
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 10; ++trial) {
    const QSeries f = random_series(rng, -2, 60);
    const QSeries g = random_series(rng, 0, 60);
    const mpz_class a = trial - 5, b = 3 * trial + 1;
    for (std::int64_t n : {2, 3, 5}) {
      CHECK(u_operator(a * f + b * g, n) == a * u_operator(f, n) + b * u_operator(g, n));
      CHECK(v_operator(a * f + b * g, n) == a * v_operator(f, n) + b * v_operator(g, n));
    }
  }
}

TEST_CASE("fit_polynomial_in_j1") {
  const QSeries j = j1_series(40);
  const PolyFit id = fit_polynomial_in_j1(j, Window{1, 39});
  CHECK(id.poly == IntPoly{{0, 1}});
  CHECK(id.residual_ok);

  const QSeries f = 2 * u_operator(tn_series(2, 80), 2) + sn_series(2, 40);
  const PolyFit c = fit_polynomial_in_j1(f, Window{1, 38});
  CHECK(c.poly == IntPoly{{-48}});
  CHECK(c.residual_ok);

  const QSeries g = v_operator(j1_series(40), 2) + 2 * u_operator(j1_series(80), 2);
  const PolyFit phi = fit_polynomial_in_j1(g, Window{1, 39});
  CHECK(phi.poly == faber_poly(2).poly);
  CHECK(phi.poly == IntPoly{{-393768, 0, 1}});
  CHECK(phi.residual_ok);

  // t_2 alone is not invariant under the full modular group.
  const PolyFit bad = fit_polynomial_in_j1(tn_series(2, 40), Window{1, 39});
  CHECK_FALSE(bad.residual_ok);

  CHECK_THROWS_AS(fit_polynomial_in_j1(j, Window{1, 40}), PrecisionError);
}

TEST_CASE("J_1 - J_{p+} = p J_{p+} | U_p") {
  for (std::int64_t p : {2, 3, 5, 7, 13}) {
    const std::int64_t prec = 60;
    const QSeries jp = jn_plus_series(p, prec * p);
    const QSeries lhs = j1_series(prec) - jn_plus_series(p, prec);
    const QSeries rhs = mpz_class(p) * u_operator(jp, p);
    CHECK(rhs.prec() == prec);
    CHECK((lhs - rhs).is_zero());
  }
}

TEST_CASE("U_p iterates of J_1 and J_{p+} share valuations") {
  for (std::int64_t p : {2, 3, 5, 7, 13}) {
    const std::int64_t prec = 40 * p * p + p * p;
    const QSeries j = j1_series(prec);
    const QSeries jp = jn_plus_series(p, prec);
    QSeries a = j, b = jp;
    for (int k = 1; k <= 2; ++k) {
      a = u_operator(a, p);
      b = u_operator(b, p);
      const Window w{1, 40};
      CHECK(vp_min(a, p, w) == vp_min(b, p, w));
    }
  }
}

TEST_CASE("U_p of the square-level eta quotients is constant") {
  const std::int64_t prec = 101;
  CHECK(u_operator(tn_series(4, 2 * prec), 2).truncate(prec).is_constant());
  CHECK(u_operator(tn_series(9, 3 * prec), 3).truncate(prec).is_constant());
  const QSeries t9 = tn_series(9, 3 * prec + 2);
  CHECK(u_operator(series_mul(t9, t9), 3).truncate(prec).is_constant());
  CHECK(u_operator(tn_series(25, 5 * prec), 5).truncate(prec).is_constant());
}

TEST_CASE("J_4 and J_9 vanish off n = -1 mod p") {
  const QSeries j4 = hauptmodul_jn(4, 301);
  const QSeries j9 = hauptmodul_jn(9, 301);
  for (std::int64_t n = -1; n <= 300; ++n) {
    if ((n + 1) % 2 != 0) CHECK(j4.coeff(n) == 0);
    if ((n + 1) % 3 != 0) CHECK(j9.coeff(n) == 0);
  }
  CHECK(j4.coeff(1) != 0);
  CHECK(j9.coeff(2) != 0);
}
