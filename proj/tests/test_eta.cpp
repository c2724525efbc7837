#include <vector>

#include "doctest.h"
#include "etaq/eta.hpp"

using namespace etaq;

TEST_CASE("euler product expands the literal finite product") {
  IntSeries p = euler_product_expand(1, 1, 5);
  CHECK(p.val() == 0);
  CHECK(p.valid_to() == 5);
  CHECK(p.coeff(0) == 1);
  CHECK(p.coeff(1) == -1);
  CHECK(p.coeff(2) == -1);
  CHECK(p.coeff(3) == 0);
  CHECK(p.coeff(4) == 0);
  CHECK(p.coeff(5) == 1);

  CHECK(euler_product_expand(1, 0, 10) == IntSeries::one(10));
  CHECK(euler_product_expand(3, -12, 50) == euler_product_expand(3, 1, 50).inverse().pow(12));
}

TEST_CASE("pentagonal expansion matches the naive product") {
  IntSeries p0 = pentagonal_expand(0);
  CHECK(p0.valid_to() == 0);
  CHECK(p0.coeff(0) == 1);

  IntSeries p7 = pentagonal_expand(7);
  CHECK(p7.coeff(0) == 1);
  CHECK(p7.coeff(1) == -1);
  CHECK(p7.coeff(2) == -1);
  CHECK(p7.coeff(3) == 0);
  CHECK(p7.coeff(4) == 0);
  CHECK(p7.coeff(5) == 1);
  CHECK(p7.coeff(6) == 0);
  CHECK(p7.coeff(7) == 1);

  for (Exp P : {10, 100, 1000}) {
    CHECK(pentagonal_expand(P) == euler_product_expand(1, 1, P));
  }
}

TEST_CASE("pentagonal memoization returns exact truncations") {
  IntSeries wide = pentagonal_expand(600);
  IntSeries narrow = pentagonal_expand(123);
  CHECK(narrow.valid_to() == 123);
  CHECK(agree_on(wide, narrow, 0, 123));
}

TEST_CASE("cube expansion matches the naive product and the cube of the pentagonal series") {
  IntSeries c0 = jacobi_cube_expand(0);
  CHECK(c0.coeff(0) == 1);

  IntSeries c3 = jacobi_cube_expand(3);
  CHECK(c3.coeff(0) == 1);
  CHECK(c3.coeff(1) == -3);
  CHECK(c3.coeff(2) == 0);
  CHECK(c3.coeff(3) == 5);

  for (Exp P : {10, 100, 1000}) {
    CHECK(jacobi_cube_expand(P) == euler_product_expand(1, 3, P));
  }
  CHECK(jacobi_cube_expand(2000) == pentagonal_expand(2000).pow(3));
}

TEST_CASE("dilated pentagonal series equals the naive dilated product") {
  IntSeries fast = pentagonal_expand(125).dilated(4);
  IntSeries naive = euler_product_expand(4, 1, 500);
  CHECK(agree_on(fast, naive, 0, 500));
}

TEST_CASE("eta quotient prefactor bookkeeping") {
  EtaQuotient delta{{{1, 24}}};
  CHECK(delta.prefactor_exponent() == 1);
  EtaQuotient f3{{{1, 12}, {3, -12}}};
  CHECK(f3.prefactor_exponent() == -1);
  EtaQuotient bad{{{1, 1}, {2, 1}}};
  CHECK_THROWS_AS(bad.prefactor_exponent(), FractionalPrefactor);
  CHECK_THROWS_AS(eta_quotient_expand(bad, 10), FractionalPrefactor);
}

TEST_CASE("eta quotient expansion windows and leading coefficients") {
  IntSeries delta = eta_quotient_expand({{{1, 24}}}, 30);
  CHECK(delta.val() == 1);
  CHECK(delta.valid_to() == 30);
  CHECK(delta.coeff(1) == 1);
  CHECK(delta.coeff(2) == -24);
  CHECK(delta.coeff(3) == 252);

  IntSeries f3 = eta_quotient_expand({{{1, 12}, {3, -12}}}, 30);
  CHECK(f3.val() == -1);
  CHECK(f3.coeff(-1) == 1);
  CHECK(f3.coeff(0) == -12);
}

TEST_CASE("fast and naive quotient paths agree") {
  for (const EtaQuotient& eq :
       {EtaQuotient{{{1, 24}}}, EtaQuotient{{{1, 12}, {3, -12}}}, EtaQuotient{{{7, 4}, {1, -4}}}}) {
    IntSeries fast = eta_quotient_expand(eq, 100, ExpansionMethod::FAST);
    IntSeries naive = eta_quotient_expand(eq, 100, ExpansionMethod::NAIVE_PRODUCT);
    CHECK(fast == naive);
  }
}

TEST_CASE("GF2 quotient path equals the reduced integer path") {
  for (const EtaQuotient& eq :
       {EtaQuotient{{{1, 12}, {3, -12}}}, EtaQuotient{{{3, 12}, {1, -12}}},
        EtaQuotient{{{1, 4}, {7, -4}}}, EtaQuotient{{{7, 4}, {1, -4}}}}) {
    CHECK(eta_quotient_expand_gf2(eq, 200) == reduce_mod2(eta_quotient_expand(eq, 200)));
  }
}

TEST_CASE("single-factor quotients are dilations of the level-one quotient") {
  IntSeries level1 = eta_quotient_expand({{{1, 24}}}, 40);
  IntSeries level3 = eta_quotient_expand({{{3, 24}}}, 90);
  IntSeries dilated = level1.dilated(3);
  Exp hi = std::min(dilated.valid_to(), level3.valid_to());
  CHECK(agree_on(level3, dilated, 3, hi));
}

TEST_CASE("split-series supports sit on single residue classes") {
  Gf2Series f3 = eta_quotient_expand_gf2({{{1, 12}, {3, -12}}}, 400);
  for (Exp e : f3.support(-1, 400)) CHECK(((e % 4) + 4) % 4 == 3);
  Gf2Series g3 = eta_quotient_expand_gf2({{{3, 12}, {1, -12}}}, 400);
  for (Exp e : g3.support(1, 400)) CHECK(e % 4 == 1);
  Gf2Series f7 = eta_quotient_expand_gf2({{{1, 4}, {7, -4}}}, 400);
  for (Exp e : f7.support(-1, 400)) CHECK(((e % 4) + 4) % 4 == 3);
  Gf2Series g7 = eta_quotient_expand_gf2({{{7, 4}, {1, -4}}}, 400);
  for (Exp e : g7.support(1, 400)) CHECK(e % 4 == 1);
}

TEST_CASE("discriminant form inverts to the constant one") {
  IntSeries delta = eta_quotient_expand({{{1, 24}}}, 60);
  IntSeries inv = delta.inverse();
  CHECK(inv.val() == -1);
  CHECK(inv.valid_to() == 58);
  IntSeries prod = delta * inv;
  CHECK(prod.coeff(0) == 1);
  for (Exp n = prod.val(); n <= prod.valid_to(); ++n) {
    if (n != 0) CHECK(prod.coeff(n) == 0);
  }
}

TEST_CASE("weight-4 Eisenstein series and its cube mod 2") {
  IntSeries e4 = eisenstein_e4(200);
  CHECK(e4.coeff(0) == 1);
  CHECK(e4.coeff(1) == 240);
  CHECK(e4.coeff(2) == 2160);  // 240 * (1 + 8)
  CHECK(e4.coeff(6) == 240 * (1 + 8 + 27 + 216));

  Gf2Series cube = reduce_mod2(e4.pow(3));
  CHECK(cube.coeff(0) == 1);
  CHECK(cube.support(1, 200).empty());
}
