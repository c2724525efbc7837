#pragma once

#include <random>
#include <vector>

#include "etaq/gf2_series.hpp"
#include "etaq/int_series.hpp"

namespace etaq::testing {

inline Gf2Series random_gf2(Exp val, Exp valid_to, std::uint64_t seed, bool unit_lead = false) {
  std::mt19937_64 rng(seed);
  std::vector<Exp> support;
  for (Exp n = val; n <= valid_to; ++n) {
    if (rng() & 1) support.push_back(n);
  }
  if (unit_lead && (support.empty() || support.front() != val)) support.insert(support.begin(), val);
  return Gf2Series::from_support(val, valid_to, support);
}

inline IntSeries random_int(Exp val, Exp valid_to, std::uint64_t seed, bool unit_lead = false) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> dist(-9, 9);
  std::vector<mpz_class> coeffs;
  coeffs.reserve(static_cast<std::size_t>(valid_to - val + 1));
  for (Exp n = val; n <= valid_to; ++n) coeffs.emplace_back(dist(rng));
  if (unit_lead) coeffs.front() = (rng() & 1) ? 1 : -1;
  return IntSeries(val, std::move(coeffs));
}

}  // namespace etaq::testing
