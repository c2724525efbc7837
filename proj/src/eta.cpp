#include "etaq/eta.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <stdexcept>

#include "etaq/errors.hpp"

namespace etaq {

namespace {

Exp ceil_div(Exp num, Exp den) {
  // num >= 0, den >= 1.
  return (num + den - 1) / den;
}

void require_nonnegative(Exp P) {
  if (P < 0) throw std::invalid_argument("expansion precision must be >= 0");
}

}  // namespace

IntSeries euler_product_expand(Exp d, Exp e, Exp P) {
  if (d < 1) throw std::invalid_argument("euler product divisor must be >= 1");
  require_nonnegative(P);
  std::vector<mpz_class> c(static_cast<std::size_t>(P) + 1);
  c[0] = 1;
  for (Exp f = d; f <= P; f += d) {
    // In-place multiply by (1 - q^f); downward order so each source
    // coefficient is still the pre-multiplication value.
    for (Exp m = P; m >= f; --m) {
      c[static_cast<std::size_t>(m)] -= c[static_cast<std::size_t>(m - f)];
    }
  }
  IntSeries base(0, std::move(c));
  if (e == 1) return base;
  return base.pow(e);
}

IntSeries pentagonal_expand(Exp P) {
  require_nonnegative(P);
  static std::mutex mu;
  static std::shared_ptr<const IntSeries> best;
  {
    std::lock_guard<std::mutex> lock(mu);
    if (best && best->valid_to() >= P) return best->truncated(P);
  }
  std::vector<mpz_class> c(static_cast<std::size_t>(P) + 1);
  c[0] = 1;
  for (Exp k = 1;; ++k) {
    Exp lo = k * (3 * k - 1) / 2;
    if (lo > P) break;
    mpz_class sign = (k % 2 == 0) ? 1 : -1;
    c[static_cast<std::size_t>(lo)] = sign;
    Exp hi = k * (3 * k + 1) / 2;
    if (hi <= P) c[static_cast<std::size_t>(hi)] = sign;
  }
  auto fresh = std::make_shared<const IntSeries>(0, std::move(c));
  std::lock_guard<std::mutex> lock(mu);
  if (!best || best->valid_to() < P) best = fresh;
  return best->truncated(P);
}

IntSeries jacobi_cube_expand(Exp P) {
  require_nonnegative(P);
  std::vector<mpz_class> c(static_cast<std::size_t>(P) + 1);
  for (Exp k = 0;; ++k) {
    Exp e = k * (k + 1) / 2;
    if (e > P) break;
    mpz_class v = 2 * k + 1;
    if (k % 2 != 0) v = -v;
    c[static_cast<std::size_t>(e)] = v;
  }
  return IntSeries(0, std::move(c));
}

Exp EtaQuotient::prefactor_exponent() const {
  Exp sum = 0;
  for (const auto& [d, r] : factors) {
    if (d < 1) throw std::invalid_argument("eta quotient divisor must be >= 1");
    sum = checked_add(sum, checked_mul(d, r));
  }
  if (sum % 24 != 0) {
    throw FractionalPrefactor("eta quotient prefactor exponent " + std::to_string(sum) +
                              "/24 is not an integer");
  }
  return sum / 24;
}

IntSeries eta_quotient_expand(const EtaQuotient& eq, Exp P, ExpansionMethod method) {
  require_nonnegative(P);
  Exp e = eq.prefactor_exponent();
  // Certified top of the unshifted (valuation-0) product; clamped so the
  // published window is [e, max(P, e - 1)] even when that window is empty.
  Exp top = std::max<Exp>(checked_sub(P, e), -1);
  IntSeries acc = IntSeries::one(top);
  if (top >= 0) {
    for (const auto& [d, r] : eq.factors) {
      if (r == 0) continue;
      IntSeries factor = [&] {
        if (method == ExpansionMethod::NAIVE_PRODUCT) return euler_product_expand(d, r, top);
        IntSeries base = pentagonal_expand(ceil_div(top, d)).dilated(d).truncated(top);
        return base.pow(r);
      }();
      acc = acc * factor;
    }
  }
  return acc.shifted(e);
}

Gf2Series eta_quotient_expand_gf2(const EtaQuotient& eq, Exp P) {
  require_nonnegative(P);
  Exp e = eq.prefactor_exponent();
  Exp top = std::max<Exp>(checked_sub(P, e), -1);
  Gf2Series acc = Gf2Series::one(top);
  if (top >= 0) {
    for (const auto& [d, r] : eq.factors) {
      if (r == 0) continue;
      Gf2Series base =
          reduce_mod2(pentagonal_expand(ceil_div(top, d))).dilated(d).truncated(top);
      acc = acc * base.pow(r);
    }
  }
  return acc.shifted(e);
}

IntSeries eisenstein_e4(Exp P) {
  require_nonnegative(P);
  std::vector<mpz_class> c(static_cast<std::size_t>(P) + 1);
  for (Exp d = 1; d <= P; ++d) {
    mpz_class cube = mpz_class(static_cast<long>(d)) * static_cast<long>(d) * static_cast<long>(d);
    for (Exp n = d; n <= P; n += d) {
      c[static_cast<std::size_t>(n)] += cube;
    }
  }
  for (Exp n = 1; n <= P; ++n) c[static_cast<std::size_t>(n)] *= 240;
  c[0] = 1;
  return IntSeries(0, std::move(c));
}

}  // namespace etaq
