#pragma once

// Slow reference expansions used only by the tests. Nothing here calls the
// library's series code.

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace oracle {

using Coeffs = std::vector<mpz_class>;

inline Coeffs mul(const Coeffs& a, const Coeffs& b, std::size_t n) {
  Coeffs out(n);
  for (std::size_t i = 0; i < n && i < a.size(); ++i)
    for (std::size_t k = 0; i + k < n && k < b.size(); ++k) out[i + k] += a[i] * b[k];
  return out;
}

// Power series a / b for b[0] = 1.
inline Coeffs div(const Coeffs& a, const Coeffs& b, std::size_t n) {
  Coeffs out(n);
  for (std::size_t i = 0; i < n; ++i) {
    mpz_class acc = i < a.size() ? a[i] : mpz_class(0);
    for (std::size_t k = 1; k <= i && k < b.size(); ++k) acc -= b[k] * out[i - k];
    out[i] = acc;
  }
  return out;
}

// prod (1 - q^n)^3 = sum_k (-1)^k (2k+1) q^{k(k+1)/2}.
inline Coeffs eta_cubed(std::size_t n) {
  Coeffs out(n);
  for (std::size_t k = 0; k * (k + 1) / 2 < n; ++k) {
    const long sign = k % 2 == 0 ? 1 : -1;
    out[k * (k + 1) / 2] = sign * static_cast<long>(2 * k + 1);
  }
  return out;
}

// Coefficients c_{-1}, c_0, c_1, ... of j = E_4^3 / Delta, n of them.
inline Coeffs j_invariant(std::size_t n) {
  Coeffs e4(n);
  e4[0] = 1;
  for (std::size_t m = 1; m < n; ++m) {
    mpz_class s = 0;
    for (std::size_t d = 1; d <= m; ++d)
      if (m % d == 0) s += mpz_class(static_cast<unsigned long>(d * d * d));
    e4[m] = 240 * s;
  }
  const Coeffs e3 = eta_cubed(n);
  Coeffs eta24 = e3;
  for (int i = 1; i < 8; ++i) eta24 = mul(eta24, e3, n);
  return div(mul(mul(e4, e4, n), e4, n), eta24, n);
}

// prod_{n>0} (1 - q^n)^d / (1 - q^{N n})^d, first n coefficients.
inline Coeffs eta_quotient_unit(long level, int d, std::size_t n) {
  Coeffs num(n), den(n);
  num[0] = 1;
  den[0] = 1;
  for (std::size_t m = 1; m < n; ++m) {
    for (int r = 0; r < d; ++r) {
      Coeffs factor(n);
      factor[0] = 1;
      factor[m] = -1;
      num = mul(num, factor, n);
      if (m * static_cast<std::size_t>(level) < n) {
        Coeffs f2(n);
        f2[0] = 1;
        f2[m * static_cast<std::size_t>(level)] = -1;
        den = mul(den, f2, n);
      }
    }
  }
  return div(num, den, n);
}

}  // namespace oracle
