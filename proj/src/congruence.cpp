#include "moonexp/congruence.hpp"

#include <string>

#include "moonexp/arith.hpp"
#include "moonexp/errors.hpp"
#include "moonexp/etaforms.hpp"
#include "moonexp/monster.hpp"
#include "moonexp/supersingular.hpp"

namespace moonexp {

std::vector<Cusp> cusp_reps(std::int64_t level) {
  if (level < 1) throw DomainError("cusp_reps: level must be >= 1");
  std::vector<Cusp> out;
  for (const std::int64_t b : divisors(level)) {
    const std::int64_t g = gcd(b, level / b);
    for (std::int64_t r = 0; r < g; ++r) {
      if (gcd(r, g) != 1) continue;
      std::int64_t a = (r == 0) ? g : r;
      while (gcd(a, b) != 1) a += g;
      out.push_back(Cusp{a, b});
    }
  }
  return out;
}

std::int64_t genus_p_power(std::int64_t p, int v) {
  if (!is_prime(p)) throw DomainError("genus_p_power: " + std::to_string(p) + " is not prime");
  if (v != 1 && v != 2) throw DomainError("genus_p_power: v must be 1 or 2");
  if (p == 2 || p == 3) return 0;
  std::int64_t a = 0;
  switch (p % 12) {
    case 1: a = 13; break;
    case 5: a = 5; break;
    case 7: a = 7; break;
    case 11: a = -1; break;
    default: throw InternalError("genus_p_power: prime residue mod 12");
  }
  std::int64_t g = (p - a) / 12;
  if (v == 2) g += (p - 5) * (p - 1) / 12;
  return g;
}

bool is_genus0_plus(std::int64_t p) {
  if (!is_prime(p)) throw DomainError("is_genus0_plus: " + std::to_string(p) + " is not prime");
  const bool listed = vp_monster_order(p) > 0;
  if (p == 2 || p == 3) return true;
  const bool computed = ss_j_set(p).s2.empty();
  if (computed != listed) {
    throw InternalError("is_genus0_plus: supersingular locus and monster order disagree at p = " +
                        std::to_string(p));
  }
  return computed;
}

mpq_class tn_cusp_vanishing_order(std::int64_t level, const Cusp& cusp) {
  if (level < 2) throw DomainError("tn_cusp_vanishing_order: level must be >= 2");
  if (level % cusp.b != 0) throw DomainError("tn_cusp_vanishing_order: b must divide N");
  const EtaParams ep = eta_quotient_params(level);
  const std::int64_t g = gcd(cusp.b, level / cusp.b);
  mpq_class order(mpz_class(ep.d * (level / cusp.b - cusp.b)), mpz_class(24 * g));
  order.canonicalize();
  return order;
}

}  // namespace moonexp
