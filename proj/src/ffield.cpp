#include "moonexp/ffield.hpp"

#include <algorithm>
#include <string>

#include "moonexp/arith.hpp"
#include "moonexp/errors.hpp"

namespace moonexp {

Fp2Field::Fp2Field(std::int64_t p) : p_(p), s_(0) {
  if (p < 3 || p > 1000 || !is_prime(p)) {
    throw DomainError("Fp2Field: need an odd prime p <= 1000, got " + std::to_string(p));
  }
  square1_.assign(static_cast<std::size_t>(p), false);
  for (std::int64_t x = 1; x < p; ++x) square1_[static_cast<std::size_t>(x * x % p)] = true;
  for (std::int64_t x = 2; x < p; ++x) {
    if (!square1_[static_cast<std::size_t>(x)]) {
      s_ = x;
      break;
    }
  }
  square2_.assign(static_cast<std::size_t>(p * p), false);
  for (std::int64_t i = 1; i < p * p; ++i) {
    const Fp2Elem x = element(i);
    square2_[static_cast<std::size_t>(index(mul(x, x)))] = true;
  }
}

Fp2Elem Fp2Field::inv(Fp2Elem x) const {
  if (is_zero(x)) throw DomainError("Fp2Field: inverse of zero");
  // (a + bt)^{-1} = (a - bt) / (a^2 - s b^2); the norm lies in F_p.
  const std::int64_t norm = mod(x.a * x.a - s_ * ((x.b * x.b) % p_));
  std::int64_t norm_inv = 1;
  std::int64_t base = norm;
  for (std::int64_t e = p_ - 2; e > 0; e >>= 1) {
    if (e & 1) norm_inv = norm_inv * base % p_;
    base = base * base % p_;
  }
  return mul(conj(x), {norm_inv, 0});
}

int Fp2Field::chi2(Fp2Elem x) const {
  if (is_zero(x)) return 0;
  return square2_[static_cast<std::size_t>(index(x))] ? 1 : -1;
}

int Fp2Field::chi1(std::int64_t x) const {
  x = mod(x);
  if (x == 0) return 0;
  return square1_[static_cast<std::size_t>(x)] ? 1 : -1;
}

Fp2Elem fp2_pow(const Fp2Field& field, Fp2Elem x, std::uint64_t e) {
  Fp2Elem result{1, 0};
  while (e > 0) {
    if (e & 1U) result = field.mul(result, x);
    x = field.mul(x, x);
    e >>= 1U;
  }
  return result;
}

PolyFp PolyFp::make(std::int64_t p, std::vector<std::int64_t> coeffs) {
  for (auto& c : coeffs) c = ((c % p) + p) % p;
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  return PolyFp{p, std::move(coeffs)};
}

Fp2Elem PolyFp::eval(const Fp2Field& field, Fp2Elem x) const {
  Fp2Elem acc{0, 0};
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc = field.add(field.mul(acc, x), {*it, 0});
  }
  return acc;
}

std::vector<Fp2Elem> poly_roots_in_fp2(const Fp2Field& field, const PolyFp& poly) {
  if (poly.is_zero()) throw DomainError("poly_roots_in_fp2: zero polynomial");
  std::vector<Fp2Elem> roots;
  for (std::int64_t i = 0; i < field.size(); ++i) {
    const Fp2Elem x = field.element(i);
    if (field.is_zero(poly.eval(field, x))) roots.push_back(x);
  }
  return roots;
}

int root_multiplicity(const Fp2Field& field, const PolyFp& poly, Fp2Elem x) {
  std::vector<Fp2Elem> c;
  c.reserve(poly.coeffs.size());
  for (auto v : poly.coeffs) c.push_back({v, 0});
  int mult = 0;
  while (c.size() > 1) {
    // Synthetic division by (X - x): quotient and remainder.
    std::vector<Fp2Elem> q(c.size() - 1);
    Fp2Elem carry{0, 0};
    for (std::size_t i = c.size(); i-- > 1;) {
      carry = field.add(field.mul(carry, x), c[i]);
      q[i - 1] = carry;
    }
    const Fp2Elem rem = field.add(field.mul(carry, x), c[0]);
    if (!field.is_zero(rem)) break;
    ++mult;
    c = std::move(q);
  }
  return mult;
}

namespace {

void require_nonsingular(const Fp2Field& field, Fp2Elem a, Fp2Elem b) {
  if (field.p() <= 3) throw DomainError("count_affine_points: need p > 3");
  const Fp2Elem a3 = field.mul(field.mul(a, a), a);
  const Fp2Elem disc = field.add(field.mul(field.from_int(4), a3),
                                 field.mul(field.from_int(27), field.mul(b, b)));
  if (field.is_zero(disc)) throw DomainError("singular Weierstrass model");
}

}  // namespace

std::int64_t count_affine_points(const Fp2Field& field, Fp2Elem a, Fp2Elem b,
                                 CountField over) {
  require_nonsingular(field, a, b);
  const std::int64_t p = field.p();
  std::int64_t count = 0;
  if (over == CountField::Base) {
    if (!a.in_base_field() || !b.in_base_field()) {
      throw DomainError("count_affine_points: coefficients not in F_p");
    }
    for (std::int64_t x = 0; x < p; ++x) {
      const std::int64_t rhs = ((x * x % p) * x + a.a * x + b.a) % p;
      count += 1 + field.chi1(rhs);
    }
    return count;
  }
  for (std::int64_t i = 0; i < field.size(); ++i) {
    const Fp2Elem x = field.element(i);
    const Fp2Elem rhs = field.add(field.mul(field.add(field.mul(x, x), a), x), b);
    count += 1 + field.chi2(rhs);
  }
  return count;
}

std::int64_t frobenius_trace(const Fp2Field& field, Fp2Elem a, Fp2Elem b, CountField over) {
  const std::int64_t q = over == CountField::Base ? field.p() : field.size();
  return q + 1 - (count_affine_points(field, a, b, over) + 1);
}

std::pair<Fp2Elem, Fp2Elem> curve_with_j(const Fp2Field& field, Fp2Elem j) {
  const Fp2Elem j1728 = field.from_int(1728);
  if (field.is_zero(j)) return {{0, 0}, {1, 0}};
  if (j == j1728) return {{1, 0}, {0, 0}};
  const Fp2Elem k = field.sub(j1728, j);
  const Fp2Elem a = field.mul(field.from_int(3), field.mul(j, k));
  const Fp2Elem b = field.mul(field.from_int(2), field.mul(j, field.mul(k, k)));
  return {a, b};
}

}  // namespace moonexp
