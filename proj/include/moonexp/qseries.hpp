#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace moonexp {

// Integer polynomial, lowest degree first. The zero polynomial has no
// coefficients.
struct IntPoly {
  std::vector<mpz_class> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  bool operator==(const IntPoly&) const = default;
};

// Inclusive exponent range [first, last].
struct Window {
  std::int64_t first = 0;
  std::int64_t last = 0;
};

/**
 * Truncated Laurent series in q with exact integer coefficients.
 *
 * A series knows every coefficient of q^n for n < prec(). Coefficients below
 * lo() are known to vanish; coefficients at or above prec() are unknown, and
 * asking for one throws PrecisionError rather than fabricating a zero.
 *
 * Canonical form: the first stored coefficient is nonzero and
 * coeffs().size() == prec() - lo(). A series that vanishes on its entire
 * window stores no coefficients and reports lo() == prec().
 */
class QSeries {
 public:
  QSeries() = default;
  // Builds the series sum_i coeffs[i] q^{lo+i} + O(q^prec). coeffs may be
  // shorter than prec - lo (the tail is then zero) but not longer.
  QSeries(std::int64_t lo, std::vector<mpz_class> coeffs, std::int64_t prec);

  static QSeries zero(std::int64_t prec);
  static QSeries constant(const mpz_class& c, std::int64_t prec);
  static QSeries monomial(const mpz_class& c, std::int64_t exponent,
                          std::int64_t prec);

  bool is_zero() const { return coeffs_.empty(); }
  std::int64_t lo() const { return lo_; }
  std::int64_t prec() const { return prec_; }
  const std::vector<mpz_class>& coeffs() const { return coeffs_; }

  // c_n of the series; zero below lo(), PrecisionError at or above prec().
  mpz_class coeff(std::int64_t n) const;

  // Same series with precision lowered to new_prec (<= prec()).
  QSeries truncate(std::int64_t new_prec) const;
  // Multiplication by q^k.
  QSeries shift(std::int64_t k) const;
  // Adds the constant c; a no-op when q^0 lies beyond the precision.
  QSeries add_constant(const mpz_class& c) const;
  // True when every known coefficient is independent of q, i.e. the series
  // is a constant on its window.
  bool is_constant() const;

  QSeries operator-() const;
  QSeries& operator+=(const QSeries& other);
  QSeries& operator-=(const QSeries& other);
  QSeries& operator*=(const mpz_class& c);

  bool operator==(const QSeries& other) const = default;

  // "q^-1 + 196884*q + ... + O(q^3)"; at most max_terms nonzero terms shown.
  std::string to_string(std::size_t max_terms = 12) const;

 private:
  void canonicalize();

  std::int64_t lo_ = 0;
  std::vector<mpz_class> coeffs_;
  std::int64_t prec_ = 0;
};

QSeries operator+(QSeries a, const QSeries& b);
QSeries operator-(QSeries a, const QSeries& b);
QSeries operator*(const mpz_class& c, QSeries f);
QSeries operator*(const QSeries& a, const QSeries& b);

// Schoolbook convolution. Result precision is
// min(f.prec + g.lo, g.prec + f.lo).
QSeries series_mul(const QSeries& f, const QSeries& g);

// f^e for e >= 0 by binary powering.
QSeries series_pow(const QSeries& f, unsigned e);

// Multiplicative inverse of a series whose leading coefficient is +-1.
// Throws DomainError("not invertible over the integers") otherwise.
QSeries series_inv(const QSeries& f);

// Exact quotient f/g for g with leading coefficient +-1; one pass of the
// division recurrence, same precision as f * series_inv(g).
QSeries series_div(const QSeries& f, const QSeries& g);

// Horner evaluation P(f).
QSeries poly_eval(const IntPoly& poly, const QSeries& f);

// p-adic valuation with the sentinel INFINITE kept distinct from any number.
class Valuation {
 public:
  static Valuation infinite() { return Valuation(); }
  static Valuation finite(std::int64_t value, std::int64_t attained_at) {
    Valuation v;
    v.value_ = value;
    v.attained_at_ = attained_at;
    return v;
  }

  bool is_infinite() const { return !value_.has_value(); }
  // Throws std::bad_optional_access for INFINITE.
  std::int64_t value() const { return value_.value(); }
  std::optional<std::int64_t> attained_at() const { return attained_at_; }

  bool operator==(const Valuation& other) const { return value_ == other.value_; }
  std::string to_string() const;

 private:
  Valuation() = default;
  std::optional<std::int64_t> value_;
  std::optional<std::int64_t> attained_at_;
};

// Minimum of v_p(c_n(f)) over n in window. The window may start below f.lo()
// (those coefficients are known zeros) but must end below f.prec().
Valuation vp_min(const QSeries& f, std::int64_t p, Window window);

}  // namespace moonexp
