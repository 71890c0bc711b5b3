#include "moonexp/qseries.hpp"

#include <algorithm>
#include <sstream>

#include "moonexp/arith.hpp"
#include "moonexp/errors.hpp"

namespace moonexp {

QSeries::QSeries(std::int64_t lo, std::vector<mpz_class> coeffs, std::int64_t prec)
    : lo_(lo), coeffs_(std::move(coeffs)), prec_(prec) {
  if (lo_ > prec_) lo_ = prec_;
  const auto width = static_cast<std::size_t>(prec_ - lo_);
  if (coeffs_.size() > width) {
    throw DomainError("QSeries: more coefficients than the precision window holds");
  }
  coeffs_.resize(width);
  canonicalize();
}

void QSeries::canonicalize() {
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  if (lead == coeffs_.size()) {
    coeffs_.clear();
    lo_ = prec_;
    return;
  }
  coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
  lo_ += static_cast<std::int64_t>(lead);
}

QSeries QSeries::zero(std::int64_t prec) { return QSeries(prec, {}, prec); }

QSeries QSeries::constant(const mpz_class& c, std::int64_t prec) {
  return monomial(c, 0, prec);
}

QSeries QSeries::monomial(const mpz_class& c, std::int64_t exponent, std::int64_t prec) {
  if (exponent >= prec) return zero(prec);
  return QSeries(exponent, {c}, prec);
}

mpz_class QSeries::coeff(std::int64_t n) const {
  if (n >= prec_) {
    throw PrecisionError("insufficient precision: coefficient of q^" + std::to_string(n) +
                         " requested from a series known to O(q^" +
                         std::to_string(prec_) + ")");
  }
  const std::int64_t i = n - lo_;
  if (i < 0 || i >= static_cast<std::int64_t>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

QSeries QSeries::truncate(std::int64_t new_prec) const {
  if (new_prec > prec_) {
    throw PrecisionError("insufficient precision: cannot extend O(q^" +
                         std::to_string(prec_) + ") to O(q^" + std::to_string(new_prec) +
                         ")");
  }
  if (new_prec <= lo_) return zero(new_prec);
  const auto keep = std::min<std::size_t>(coeffs_.size(),
                                          static_cast<std::size_t>(new_prec - lo_));
  return QSeries(lo_, std::vector<mpz_class>(coeffs_.begin(), coeffs_.begin() + keep),
                 new_prec);
}

QSeries QSeries::shift(std::int64_t k) const {
  QSeries out = *this;
  out.lo_ += k;
  out.prec_ += k;
  return out;
}

QSeries QSeries::add_constant(const mpz_class& c) const {
  if (prec_ <= 0 || c == 0) return *this;
  return *this + constant(c, prec_);
}

bool QSeries::is_constant() const {
  if (is_zero()) return true;
  if (lo_ != 0) return false;
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const mpz_class& c) { return c == 0; });
}

QSeries QSeries::operator-() const {
  QSeries out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

namespace {

QSeries combine(const QSeries& a, const QSeries& b, bool subtract) {
  const std::int64_t prec = std::min(a.prec(), b.prec());
  const std::int64_t lo = std::min({a.lo(), b.lo(), prec});
  std::vector<mpz_class> out(static_cast<std::size_t>(prec - lo));
  const auto accumulate = [&](const QSeries& s, bool negate) {
    for (std::size_t i = 0; i < s.coeffs().size(); ++i) {
      const std::int64_t e = s.lo() + static_cast<std::int64_t>(i);
      if (e >= prec) break;
      auto& slot = out[static_cast<std::size_t>(e - lo)];
      if (negate) {
        slot -= s.coeffs()[i];
      } else {
        slot += s.coeffs()[i];
      }
    }
  };
  accumulate(a, false);
  accumulate(b, subtract);
  return QSeries(lo, std::move(out), prec);
}

}  // namespace

QSeries& QSeries::operator+=(const QSeries& other) {
  *this = combine(*this, other, false);
  return *this;
}

QSeries& QSeries::operator-=(const QSeries& other) {
  *this = combine(*this, other, true);
  return *this;
}

QSeries& QSeries::operator*=(const mpz_class& c) {
  for (auto& x : coeffs_) x *= c;
  canonicalize();
  return *this;
}

QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
QSeries operator*(const mpz_class& c, QSeries f) { return f *= c; }
QSeries operator*(const QSeries& a, const QSeries& b) { return series_mul(a, b); }

std::string QSeries::to_string(std::size_t max_terms) const {
  std::ostringstream os;
  std::size_t shown = 0;
  for (std::size_t i = 0; i < coeffs_.size() && shown < max_terms; ++i) {
    const mpz_class& c = coeffs_[i];
    if (c == 0) continue;
    const std::int64_t e = lo_ + static_cast<std::int64_t>(i);
    if (shown > 0) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    const mpz_class mag = abs(c);
    if (e == 0) {
      os << mag;
    } else {
      if (mag != 1) os << mag << "*";
      os << "q";
      if (e != 1) os << "^" << e;
    }
    ++shown;
  }
  if (shown > 0) os << " + ";
  os << "O(q^" << prec_ << ")";
  return os.str();
}

QSeries series_mul(const QSeries& f, const QSeries& g) {
  const std::int64_t lo = f.lo() + g.lo();
  const std::int64_t prec = std::min(f.prec() + g.lo(), g.prec() + f.lo());
  if (f.is_zero() || g.is_zero() || prec <= lo) return QSeries::zero(prec);
  const auto n = static_cast<std::size_t>(prec - lo);
  const auto& a = f.coeffs();
  const auto& b = g.coeffs();
  std::vector<mpz_class> out(n);
  for (std::size_t i = 0; i < a.size() && i < n; ++i) {
    if (a[i] == 0) continue;
    const mpz_srcptr ai = a[i].get_mpz_t();
    const std::size_t jmax = std::min(b.size(), n - i);
    for (std::size_t j = 0; j < jmax; ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), ai, b[j].get_mpz_t());
    }
  }
  return QSeries(lo, std::move(out), prec);
}

QSeries series_pow(const QSeries& f, unsigned e) {
  if (e == 0) return QSeries::constant(1, std::max<std::int64_t>(f.prec() - f.lo(), 1));
  QSeries result;
  bool have = false;
  QSeries base = f;
  while (e > 0) {
    if (e & 1U) {
      result = have ? series_mul(result, base) : base;
      have = true;
    }
    e >>= 1U;
    if (e > 0) base = series_mul(base, base);
  }
  return result;
}

QSeries series_inv(const QSeries& f) {
  if (f.is_zero()) throw DomainError("not invertible over the integers: zero series");
  const auto& a = f.coeffs();
  const mpz_class& lead = a.front();
  if (lead != 1 && lead != -1) {
    throw DomainError("not invertible over the integers: leading coefficient " +
                      lead.get_str());
  }
  const std::int64_t width = f.prec() - f.lo();
  const auto n = static_cast<std::size_t>(width);
  std::vector<mpz_class> g(n);
  g[0] = lead;
  mpz_class acc;
  for (std::size_t k = 1; k < n; ++k) {
    acc = 0;
    const std::size_t imax = std::min(k, a.size() - 1);
    for (std::size_t i = 1; i <= imax; ++i) {
      if (a[i] == 0) continue;
      mpz_addmul(acc.get_mpz_t(), a[i].get_mpz_t(), g[k - i].get_mpz_t());
    }
    // lead^{-1} == lead for a unit.
    if (lead == 1) {
      g[k] = -acc;
    } else {
      g[k] = acc;
    }
  }
  return QSeries(-f.lo(), std::move(g), width - f.lo());
}

QSeries series_div(const QSeries& f, const QSeries& g) {
  if (g.is_zero()) throw DomainError("not invertible over the integers: zero series");
  const auto& b = g.coeffs();
  const mpz_class& lead = b.front();
  if (lead != 1 && lead != -1) {
    throw DomainError("not invertible over the integers: leading coefficient " +
                      lead.get_str());
  }
  const std::int64_t lo = f.lo() - g.lo();
  const std::int64_t width = std::min(f.prec() - f.lo(), g.prec() - g.lo());
  if (f.is_zero() || width <= 0) return QSeries::zero(lo + std::max<std::int64_t>(width, 0));
  const auto n = static_cast<std::size_t>(width);
  const auto& a = f.coeffs();
  std::vector<mpz_class> h(n);
  mpz_class acc;
  for (std::size_t k = 0; k < n; ++k) {
    acc = a[k];
    const std::size_t imax = std::min(k, b.size() - 1);
    for (std::size_t i = 1; i <= imax; ++i) {
      if (b[i] == 0) continue;
      mpz_submul(acc.get_mpz_t(), b[i].get_mpz_t(), h[k - i].get_mpz_t());
    }
    if (lead == 1) {
      h[k] = acc;
    } else {
      h[k] = -acc;
    }
  }
  return QSeries(lo, std::move(h), lo + width);
}

QSeries poly_eval(const IntPoly& poly, const QSeries& f) {
  if (poly.coeffs.empty()) return QSeries::zero(f.prec());
  const int m = poly.degree();
  if (m == 0) return QSeries::constant(poly.coeffs[0], f.prec());
  QSeries g = poly.coeffs[static_cast<std::size_t>(m)] * f;
  g = g.add_constant(poly.coeffs[static_cast<std::size_t>(m - 1)]);
  for (int i = m - 2; i >= 0; --i) {
    g = series_mul(g, f).add_constant(poly.coeffs[static_cast<std::size_t>(i)]);
  }
  return g;
}

std::string Valuation::to_string() const {
  return is_infinite() ? std::string("inf") : std::to_string(*value_);
}

Valuation vp_min(const QSeries& f, std::int64_t p, Window window) {
  if (window.last >= f.prec()) {
    throw PrecisionError("insufficient precision: valuation window ends at q^" +
                         std::to_string(window.last) + " but the series is known to O(q^" +
                         std::to_string(f.prec()) + ")");
  }
  std::optional<std::int64_t> best;
  std::int64_t at = 0;
  const std::int64_t start = std::max(window.first, f.lo());
  const std::int64_t stop =
      std::min(window.last, f.lo() + static_cast<std::int64_t>(f.coeffs().size()) - 1);
  for (std::int64_t n = start; n <= stop; ++n) {
    const mpz_class& c = f.coeffs()[static_cast<std::size_t>(n - f.lo())];
    if (c == 0) continue;
    const std::int64_t v = vp(c, p);
    if (!best || v < *best) {
      best = v;
      at = n;
      if (v == 0) break;
    }
  }
  if (!best) return Valuation::infinite();
  return Valuation::finite(*best, at);
}

}  // namespace moonexp
