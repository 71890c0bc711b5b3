#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace moonexp {

bool is_prime(std::int64_t n);

// Primes in [lo, hi], ascending.
std::vector<std::int64_t> primes_in(std::int64_t lo, std::int64_t hi);

// If n = p^k for a prime p and k >= 1, returns p and sets *exponent = k;
// otherwise returns 0.
std::int64_t prime_power_base(std::int64_t n, int* exponent = nullptr);

// p-adic valuation of a nonzero integer. Undefined for zero: callers must
// test for zero first.
std::int64_t vp(const mpz_class& x, std::int64_t p);
std::int64_t vp(std::int64_t x, std::int64_t p);

// Ceiling of a/b for b > 0.
std::int64_t ceil_div(std::int64_t a, std::int64_t b);
// Floor of a/b for b > 0.
std::int64_t floor_div(std::int64_t a, std::int64_t b);

std::int64_t gcd(std::int64_t a, std::int64_t b);
std::int64_t euler_phi(std::int64_t n);
std::vector<std::int64_t> divisors(std::int64_t n);

}  // namespace moonexp
