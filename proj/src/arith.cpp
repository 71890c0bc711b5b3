#include "moonexp/arith.hpp"

#include <numeric>

#include "moonexp/errors.hpp"

namespace moonexp {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::int64_t> primes_in(std::int64_t lo, std::int64_t hi) {
  std::vector<std::int64_t> out;
  for (std::int64_t n = lo; n <= hi; ++n) {
    if (is_prime(n)) out.push_back(n);
  }
  return out;
}

std::int64_t prime_power_base(std::int64_t n, int* exponent) {
  if (n < 2) return 0;
  std::int64_t p = 0;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) p = n;
  int k = 0;
  while (n % p == 0) {
    n /= p;
    ++k;
  }
  if (n != 1) return 0;
  if (exponent) *exponent = k;
  return p;
}

std::int64_t vp(const mpz_class& x, std::int64_t p) {
  if (x == 0) throw DomainError("vp: valuation of zero");
  if (p == 2) return static_cast<std::int64_t>(mpz_scan1(x.get_mpz_t(), 0));
  mpz_class rest;
  mpz_class prime(static_cast<long>(p));
  return static_cast<std::int64_t>(
      mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), prime.get_mpz_t()));
}

std::int64_t vp(std::int64_t x, std::int64_t p) {
  if (x == 0) throw DomainError("vp: valuation of zero");
  std::int64_t k = 0;
  while (x % p == 0) {
    x /= p;
    ++k;
  }
  return k;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && (a < 0)) --q;
  return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

std::int64_t gcd(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

std::int64_t euler_phi(std::int64_t n) {
  std::int64_t result = n;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      while (n % d == 0) n /= d;
      result -= result / d;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t d = 1; d <= n; ++d) {
    if (n % d == 0) out.push_back(d);
  }
  return out;
}

}  // namespace moonexp
