#pragma once

#include <vector>

#include "etaq/exponent.hpp"
#include "etaq/gf2_series.hpp"
#include "etaq/int_series.hpp"

namespace etaq {

// Expansion strategies for eta-type products. FAST uses the pentagonal-number
// sum for each Euler factor; NAIVE_PRODUCT multiplies the (1 - q^{dn}) factors
// one by one and exists as a permanent oracle for the fast route.
enum class ExpansionMethod { FAST, NAIVE_PRODUCT };

// prod_{n>=1} (1 - q^{dn})^e on [0, P], by the literal finite product followed
// by pow(e). No fractional prefactor is included.
IntSeries euler_product_expand(Exp d, Exp e, Exp P);

// prod_{n>=1} (1 - q^n) on [0, P]: coefficient (-1)^k at the two exponents
// k(3k-1)/2 and k(3k+1)/2. Memoized; concurrent calls are safe.
IntSeries pentagonal_expand(Exp P);

// prod_{n>=1} (1 - q^n)^3 on [0, P]: coefficient (-1)^k (2k+1) at k(k+1)/2.
IntSeries jacobi_cube_expand(Exp P);

// One eta quotient prod_d eta(d z)^{r_d}. Divisors must be distinct and >= 1,
// exponents nonzero. The q-prefactor exponent is sum(d * r_d) / 24 and must be
// an integer (FractionalPrefactor otherwise).
struct EtaQuotient {
  std::vector<std::pair<Exp, Exp>> factors;  // (divisor d, exponent r)

  // Checked prefactor exponent sum(d * r_d) / 24.
  Exp prefactor_exponent() const;
};

// Expands an eta quotient on the window [e, max(P, e - 1)] with e the
// prefactor exponent. Negative factor exponents invert first, then raise to
// the positive power.
IntSeries eta_quotient_expand(const EtaQuotient& eq, Exp P,
                              ExpansionMethod method = ExpansionMethod::FAST);

// Same quotient over GF2. The atoms are mod-2 reductions of the integer
// pentagonal expansion; only audited GF2 ring operations combine them.
Gf2Series eta_quotient_expand_gf2(const EtaQuotient& eq, Exp P);

// Normalized weight-4 Eisenstein series 1 + 240 sum sigma_3(n) q^n on [0, P],
// sigma_3 by divisor sieve.
IntSeries eisenstein_e4(Exp P);

}  // namespace etaq
