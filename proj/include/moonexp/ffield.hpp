#pragma once

#include <cstdint>
#include <vector>

namespace moonexp {

// a + b*t in F_{p^2}, where t^2 = s for the field's fixed non-residue s.
struct Fp2Elem {
  std::int64_t a = 0;
  std::int64_t b = 0;

  bool in_base_field() const { return b == 0; }
  auto operator<=>(const Fp2Elem&) const = default;
};

/**
 * F_p and F_{p^2} for an odd prime p <= 1000.
 *
 * F_{p^2} = F_p[t]/(t^2 - s) with s the smallest positive quadratic
 * non-residue mod p. Squares of F_{p^2} are tabulated on construction so the
 * quadratic character is a lookup.
 */
class Fp2Field {
 public:
  explicit Fp2Field(std::int64_t p);

  std::int64_t p() const { return p_; }
  std::int64_t nonresidue() const { return s_; }
  std::int64_t size() const { return p_ * p_; }

  Fp2Elem from_int(std::int64_t x) const { return {mod(x), 0}; }
  Fp2Elem add(Fp2Elem x, Fp2Elem y) const { return {(x.a + y.a) % p_, (x.b + y.b) % p_}; }
  Fp2Elem sub(Fp2Elem x, Fp2Elem y) const {
    return {(x.a - y.a + p_) % p_, (x.b - y.b + p_) % p_};
  }
  Fp2Elem neg(Fp2Elem x) const { return {(p_ - x.a) % p_, (p_ - x.b) % p_}; }
  Fp2Elem mul(Fp2Elem x, Fp2Elem y) const {
    return {(x.a * y.a + s_ * ((x.b * y.b) % p_)) % p_, (x.a * y.b + x.b * y.a) % p_};
  }
  Fp2Elem inv(Fp2Elem x) const;
  Fp2Elem conj(Fp2Elem x) const { return {x.a, (p_ - x.b) % p_}; }
  bool is_zero(Fp2Elem x) const { return x.a == 0 && x.b == 0; }

  // Enumeration index a*p + b, and its inverse.
  std::int64_t index(Fp2Elem x) const { return x.a * p_ + x.b; }
  Fp2Elem element(std::int64_t index) const { return {index / p_, index % p_}; }

  // Quadratic character of F_{p^2}: 0, +1 or -1.
  int chi2(Fp2Elem x) const;
  // Legendre symbol of F_p.
  int chi1(std::int64_t x) const;

  std::int64_t mod(std::int64_t x) const { return ((x % p_) + p_) % p_; }

 private:
  std::int64_t p_;
  std::int64_t s_;
  std::vector<bool> square2_;
  std::vector<bool> square1_;
};

Fp2Elem fp2_pow(const Fp2Field& field, Fp2Elem x, std::uint64_t e);

// Polynomial over F_p, lowest degree first; the leading coefficient is
// nonzero unless the polynomial is zero (no coefficients).
struct PolyFp {
  std::int64_t p = 0;
  std::vector<std::int64_t> coeffs;

  static PolyFp make(std::int64_t p, std::vector<std::int64_t> coeffs);
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  bool is_zero() const { return coeffs.empty(); }
  Fp2Elem eval(const Fp2Field& field, Fp2Elem x) const;
};

// Every root of P in F_{p^2}, found by evaluating at all p^2 elements,
// sorted by (a, b). Throws DomainError for the zero polynomial.
std::vector<Fp2Elem> poly_roots_in_fp2(const Fp2Field& field, const PolyFp& poly);

// Multiplicity of a root of P (0 when x is not a root).
int root_multiplicity(const Fp2Field& field, const PolyFp& poly, Fp2Elem x);

enum class CountField { Base, Quadratic };

// Affine points of y^2 = x^3 + a x + b over F_p or F_{p^2}, as the sum of
// 1 + chi(x^3 + a x + b). Requires p > 3 and a nonsingular model; over F_p
// the coefficients must lie in F_p.
std::int64_t count_affine_points(const Fp2Field& field, Fp2Elem a, Fp2Elem b,
                                 CountField over);

// Frobenius trace q + 1 - #E for the projective curve.
std::int64_t frobenius_trace(const Fp2Field& field, Fp2Elem a, Fp2Elem b, CountField over);

// A Weierstrass model (a, b) with the given j-invariant: y^2 = x^3 + 1 for
// j = 0, y^2 = x^3 + x for j = 1728, else a = 3j(1728-j), b = 2j(1728-j)^2.
std::pair<Fp2Elem, Fp2Elem> curve_with_j(const Fp2Field& field, Fp2Elem j);

}  // namespace moonexp
