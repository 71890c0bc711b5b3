#include "moonexp/supersingular.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <string>

#include "moonexp/arith.hpp"
#include "moonexp/congruence.hpp"
#include "moonexp/errors.hpp"

namespace moonexp {

PolyFp hasse_poly(std::int64_t p) {
  if (p <= 3 || !is_prime(p)) throw DomainError("hasse_poly: need a prime p > 3");
  const std::int64_t m = (p - 1) / 2;
  std::vector<std::int64_t> coeffs;
  mpz_class binom;
  for (std::int64_t i = 0; i <= m; ++i) {
    mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(i));
    const mpz_class sq = binom * binom;
    coeffs.push_back(mpz_class(sq % p).get_si());
  }
  return PolyFp::make(p, std::move(coeffs));
}

int aut_order(Fp2Elem j, std::int64_t p) {
  if (p <= 3) throw DomainError("aut_order: need p > 3");
  if (j == Fp2Elem{0, 0}) return 6;
  if (j == Fp2Elem{1728 % p, 0}) return 4;
  return 2;
}

namespace {

std::set<Fp2Elem> hasse_route(const Fp2Field& field) {
  const PolyFp h = hasse_poly(field.p());
  const Fp2Elem zero{0, 0};
  const Fp2Elem one{1, 0};
  if (field.is_zero(h.eval(field, zero)) || field.is_zero(h.eval(field, one))) {
    throw InternalError("hasse_poly vanishes at 0 or 1 for p = " + std::to_string(field.p()));
  }
  std::set<Fp2Elem> out;
  const Fp2Elem c256 = field.from_int(256);
  for (const Fp2Elem x : poly_roots_in_fp2(field, h)) {
    const Fp2Elem x2 = field.mul(x, x);
    const Fp2Elem u = field.add(field.sub(x2, x), one);
    const Fp2Elem num = field.mul(c256, field.mul(field.mul(u, u), u));
    const Fp2Elem xm1 = field.sub(x, one);
    const Fp2Elem den = field.mul(x2, field.mul(xm1, xm1));
    out.insert(field.mul(num, field.inv(den)));
  }
  return out;
}

std::set<Fp2Elem> point_count_route(const Fp2Field& field) {
  std::set<Fp2Elem> out;
  for (std::int64_t i = 0; i < field.size(); ++i) {
    const Fp2Elem j = field.element(i);
    const auto [a, b] = curve_with_j(field, j);
    if (frobenius_trace(field, a, b, CountField::Quadratic) % field.p() == 0) out.insert(j);
  }
  return out;
}

SupersingularData tabulated_small(std::int64_t p) {
  SupersingularData data;
  data.p = p;
  data.s1 = {0};
  data.m_p = (p == 2) ? 24 : 12;
  data.aut_orders[{0, 0}] = data.m_p;
  return data;
}

std::mutex cache_mutex;
std::map<std::int64_t, SupersingularData> cache;

}  // namespace

SupersingularData ss_j_set(std::int64_t p, SsOptions options) {
  if (!is_prime(p)) throw DomainError("ss_j_set: " + std::to_string(p) + " is not prime");
  if (p <= 3) return tabulated_small(p);
  const bool run_oracle = options.point_count_oracle && p <= options.oracle_max_p;
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    const auto it = cache.find(p);
    if (it != cache.end() && (it->second.oracle_checked || !run_oracle)) return it->second;
  }
  const Fp2Field field(p);
  const std::set<Fp2Elem> locus = hasse_route(field);
  if (run_oracle) {
    const std::set<Fp2Elem> oracle = point_count_route(field);
    if (oracle != locus) {
      throw InternalError("ss_j_set: Hasse-polynomial and point-count loci differ at p = " +
                          std::to_string(p));
    }
  }

  SupersingularData data;
  data.p = p;
  data.m_p = 6;
  for (const Fp2Elem j : locus) {
    const int aut = aut_order(j, p);
    data.aut_orders[j] = aut;
    data.m_p = std::min(data.m_p, aut);
    if (j.in_base_field()) {
      data.s1.push_back(j.a);
    } else if (j.b < field.conj(j).b) {
      if (locus.count(field.conj(j)) == 0) {
        throw InternalError("ss_j_set: locus not closed under Frobenius at p = " +
                            std::to_string(p));
      }
      data.s2.emplace_back(j, field.conj(j));
    }
  }
  // std::set iteration already yields s1 ascending and s2 ordered by (a, b).
  data.oracle_checked = run_oracle;
  std::lock_guard<std::mutex> lock(cache_mutex);
  cache[p] = data;
  return data;
}

mpq_class eichler_mass(const SupersingularData& data) {
  mpq_class mass = 0;
  for (const auto& [j, aut] : data.aut_orders) mass += mpq_class(1, aut);
  mass.canonicalize();
  return mass;
}

SsJ1Row ss_j1_table(std::int64_t p) {
  if (!is_genus0_plus(p)) {
    throw DomainError("ss_j1_table: Gamma_0(" + std::to_string(p) + ")+ has positive genus");
  }
  const SupersingularData data = ss_j_set(p);
  const auto reduce = [p](std::int64_t x) { return ((x % p) + p) % p; };
  const std::int64_t minus744 = reduce(-744);
  const std::int64_t c984 = reduce(984);
  SsJ1Row row;
  row.p = p;
  for (const std::int64_t j : data.s1) {
    const std::int64_t value = reduce(j - 744);
    bool placed = false;
    if (value == minus744) {
      row.minus744 = value;
      placed = true;
    }
    if (value == c984) {
      row.c984 = value;
      placed = true;
    }
    if (!placed) row.other.push_back(value);
  }
  std::sort(row.other.begin(), row.other.end());
  return row;
}

}  // namespace moonexp
