#include "doctest.h"
#include "moonexp/arith.hpp"
#include "moonexp/congruence.hpp"
#include "moonexp/etaforms.hpp"
#include "moonexp/known_values.hpp"

using namespace moonexp;

namespace {

std::int64_t divisor_sum_cusp_count(std::int64_t level) {
  std::int64_t count = 0;
  for (std::int64_t b : divisors(level)) count += euler_phi(gcd(b, level / b));
  return count;
}

}  // namespace

TEST_CASE("cusp_reps") {
  CHECK(cusp_reps(1) == std::vector<Cusp>{{1, 1}});
  for (std::int64_t p : {2, 3, 5, 71}) CHECK(cusp_reps(p) == std::vector<Cusp>{{1, 1}, {1, p}});
  CHECK(cusp_reps(4) == std::vector<Cusp>{{1, 1}, {1, 2}, {1, 4}});

  for (std::int64_t level = 1; level <= 200; ++level) {
    const auto cusps = cusp_reps(level);
    CHECK(static_cast<std::int64_t>(cusps.size()) == divisor_sum_cusp_count(level));
    for (const Cusp& c : cusps) {
      CHECK(level % c.b == 0);
      CHECK(gcd(c.a, c.b) == 1);
      CHECK(c.a >= 1);
    }
  }
  for (std::int64_t p : primes_in(3, 50)) CHECK(static_cast<std::int64_t>(cusp_reps(p * p).size()) == p + 1);
}

TEST_CASE("genus_p_power") {
  CHECK(genus_p_power(13, 1) == 0);
  CHECK(genus_p_power(11, 1) == 1);
  CHECK(genus_p_power(7, 2) == 1);
  CHECK(genus_p_power(2, 2) == 0);
  CHECK(genus_p_power(3, 2) == 0);
  CHECK(genus_p_power(5, 2) == 0);
  CHECK(genus_p_power(37, 1) == 2);
}

TEST_CASE("genus zero iff N - 1 divides 24") {
  for (std::int64_t p : primes_in(2, 100)) {
    for (int v : {1, 2}) {
      const std::int64_t n = v == 1 ? p : p * p;
      CHECK((genus_p_power(p, v) == 0) == (24 % (n - 1) == 0));
    }
  }
}

TEST_CASE("is_genus0_plus") {
  CHECK(is_genus0_plus(71));
  CHECK_FALSE(is_genus0_plus(37));
  CHECK(is_genus0_plus(13));
  CHECK(is_genus0_plus(2));
  CHECK(is_genus0_plus(3));
  for (std::int64_t p : primes_in(2, 150)) CHECK(is_genus0_plus(p) == (known::monster_exponent(p) > 0));
}

TEST_CASE("tn_cusp_vanishing_order") {
  CHECK(tn_cusp_vanishing_order(4, Cusp{1, 1}) == 1);
  CHECK(tn_cusp_vanishing_order(6, Cusp{1, 3}) < 0);
  CHECK(tn_cusp_vanishing_order(9, Cusp{1, 3}) == 0);
  // The infinite cusp carries the pole of order n_N.
  for (std::int64_t level : {2, 5, 13, 25}) {
    CHECK(tn_cusp_vanishing_order(level, Cusp{1, level}) == -eta_quotient_params(level).n);
  }
}

TEST_CASE("bounded away from infinity iff prime or prime square") {
  for (std::int64_t level = 2; level <= 30; ++level) {
    bool bounded = true;
    for (const Cusp& c : cusp_reps(level)) {
      if (c.b == level) continue;
      if (tn_cusp_vanishing_order(level, c) < 0) bounded = false;
    }
    int k = 0;
    const bool p_or_p2 = prime_power_base(level, &k) != 0 && k <= 2;
    CHECK_MESSAGE(bounded == p_or_p2, "N = " << level);
  }
}
