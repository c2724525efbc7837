#include <stdexcept>
#include <thread>
#include <vector>

#include "doctest.h"
#include "etaq/hauptmodul.hpp"

using namespace etaq;

TEST_CASE("level bookkeeping") {
  for (int N : {2, 3, 4, 5, 7, 13}) require_level(N);
  CHECK_THROWS_AS(require_level(6), UnsupportedLevel);
  CHECK_THROWS_AS(require_level(1), UnsupportedLevel);

  CHECK(quotient_exponent(2) == 24);
  CHECK(quotient_exponent(3) == 12);
  CHECK(quotient_exponent(4) == 8);
  CHECK(quotient_exponent(5) == 6);
  CHECK(quotient_exponent(7) == 4);
  CHECK(quotient_exponent(13) == 2);

  CHECK(fricke_scale(2) == 4096);
  CHECK(fricke_scale(3) == 729);
  CHECK(fricke_scale(4) == 256);
  CHECK(fricke_scale(5) == 125);
  CHECK(fricke_scale(7) == 49);
  CHECK(fricke_scale(13) == 13);
}

TEST_CASE("id naming round-trips") {
  std::vector<std::string> names{"j", "j2", "j13", "j2+", "j7+", "f3+", "g13+"};
  for (const auto& name : names) {
    CHECK(to_string(parse_hauptmodul_id(name)) == name);
  }
  CHECK(parse_hauptmodul_id("j") == HauptmodulId{HauptKind::J, 0});
  CHECK(parse_hauptmodul_id("f7+") == HauptmodulId{HauptKind::F_PLUS, 7});
  CHECK_THROWS_AS(parse_hauptmodul_id("j6"), UnsupportedLevel);
  CHECK_THROWS_AS(parse_hauptmodul_id("f2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_hauptmodul_id(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_hauptmodul_id("q"), std::invalid_argument);
}

TEST_CASE("expansion of j reproduces the classical leading coefficients") {
  Catalog catalog;
  CatalogEntry entry = catalog.expand_ints({HauptKind::J, 0}, 2);
  REQUIRE(entry.ints);
  CHECK(entry.ints->val() == -1);
  CHECK(entry.ints->coeff(-1) == 1);
  CHECK(entry.ints->coeff(0) == 744);
  CHECK(entry.ints->coeff(1) == 196884);
  CHECK(entry.ints->coeff(2) == 21493760);
  CHECK(entry.precision == 2);
}

TEST_CASE("valuations across the catalog") {
  Catalog catalog;
  for (const char* name : {"j", "j2", "j5", "j2+", "j13+", "f3+", "f7+"}) {
    CHECK(catalog.expand(parse_hauptmodul_id(name), 5).bits->val() == -1);
  }
  for (const char* name : {"g3+", "g7+", "g13+"}) {
    CatalogEntry entry = catalog.expand_ints(parse_hauptmodul_id(name), 5);
    CHECK(entry.bits->val() == 1);
    CHECK(entry.ints->coeff(1) == 1);
  }
}

TEST_CASE("integer and GF2 paths cohere") {
  Catalog catalog;
  for (const char* name : {"j", "j3", "j3+", "f3+", "g3+", "j13+"}) {
    CatalogEntry entry = catalog.expand_ints(parse_hauptmodul_id(name), 80);
    REQUIRE(entry.ints);
    CHECK(reduce_mod2(*entry.ints) == *entry.bits);
  }
}

TEST_CASE("level identities over the integers") {
  Catalog catalog;
  IntSeries j3 = *catalog.expand_ints({HauptKind::J_LEVEL, 3}, 100).ints;
  IntSeries f3 = *catalog.expand_ints({HauptKind::F_PLUS, 3}, 100).ints;
  CHECK(j3 == f3 + IntSeries::constant(12, 100));

  IntSeries j3p = *catalog.expand_ints({HauptKind::J_PLUS, 3}, 100).ints;
  IntSeries g3 = *catalog.expand_ints({HauptKind::G_PLUS, 3}, 100).ints;
  CHECK(j3p == j3 + g3.scaled(729));
  CHECK(j3p.coeff(0) == 0);  // -12 + 12, with the level-3 correction starting at q
}

TEST_CASE("parity accessor enforces the precision guard") {
  Catalog catalog;
  CHECK(catalog.coeff_parity({HauptKind::J, 0}, -1, 10) == 1);
  CHECK(catalog.coeff_parity({HauptKind::J, 0}, 2, 100) == 0);
  CHECK(catalog.coeff_parity({HauptKind::J, 0}, 7, 100) ==
        catalog.coeff_parity({HauptKind::J_PLUS, 2}, 7, 100));
  CHECK_THROWS_AS(catalog.coeff_parity({HauptKind::J, 0}, 11, 10), QueryBeyondPrecision);
}

TEST_CASE("cache returns the widest window computed so far") {
  Catalog catalog;
  CatalogEntry wide = catalog.expand({HauptKind::F_PLUS, 3}, 50);
  CatalogEntry narrow = catalog.expand({HauptKind::F_PLUS, 3}, 20);
  CHECK(narrow.precision == 20);
  CHECK(narrow.bits.get() == wide.bits.get());  // shared immutable series
  CHECK(narrow.bits->valid_to() >= 50);
}

TEST_CASE("integer expansions respect the cap") {
  Catalog catalog(100);
  CHECK(catalog.int_cap() == 100);
  CHECK_THROWS_AS(catalog.expand_ints({HauptKind::J, 0}, 101), std::invalid_argument);
  CHECK(catalog.expand_ints({HauptKind::J, 0}, 100).ints != nullptr);
}

TEST_CASE("oracle catalogs produce identical series") {
  Catalog fast;
  Catalog oracle(20000, true);
  CHECK(oracle.oracle());
  for (const char* name : {"j", "j2+", "f7+"}) {
    HauptmodulId id = parse_hauptmodul_id(name);
    CHECK(*fast.expand_ints(id, 60).ints == *oracle.expand_ints(id, 60).ints);
  }
}

TEST_CASE("bit flips fork the catalog without touching the original") {
  Catalog catalog;
  catalog.expand({HauptKind::J, 0}, 100);
  Catalog fork = catalog.fork_with_bit_flip({HauptKind::J, 0}, 31);
  CHECK(fork.coeff_parity({HauptKind::J, 0}, 31, 100) !=
        catalog.coeff_parity({HauptKind::J, 0}, 31, 100));
  CHECK(fork.coeff_parity({HauptKind::J, 0}, 30, 100) ==
        catalog.coeff_parity({HauptKind::J, 0}, 30, 100));
  CHECK_THROWS_AS(catalog.fork_with_bit_flip({HauptKind::J, 0}, 101), std::logic_error);
  CHECK_THROWS_AS(catalog.fork_with_bit_flip({HauptKind::J_LEVEL, 5}, 3), std::logic_error);
}

TEST_CASE("concurrent expansion publishes one consistent entry") {
  Catalog catalog;
  std::vector<std::thread> workers;
  std::vector<CatalogEntry> entries(8);
  for (int i = 0; i < 8; ++i) {
    workers.emplace_back([&catalog, &entries, i] {
      entries[std::size_t(i)] = catalog.expand({HauptKind::J_PLUS, 5}, 400 + 10 * (i % 3));
    });
  }
  for (auto& w : workers) w.join();
  for (const auto& entry : entries) {
    CHECK(agree_on(*entry.bits, *entries[0].bits, -1, 400));
  }
}
