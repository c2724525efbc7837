#pragma once

#include <stdexcept>
#include <string>

namespace etaq {

// Thrown when a coefficient past a series' certified window is requested.
struct QueryBeyondPrecision : std::out_of_range {
  long long requested;
  long long certified;
  QueryBeyondPrecision(long long n, long long valid_to)
      : std::out_of_range("coefficient at exponent " + std::to_string(n) +
                          " requested, but the series is only certified through exponent " +
                          std::to_string(valid_to) + "; minimum sufficient precision is " +
                          std::to_string(n)),
        requested(n),
        certified(valid_to) {}
};

// Inversion needs the stored leading coefficient to be a unit (+-1 over INT, 1 over GF2).
struct NonUnitLeadingCoefficient : std::domain_error {
  using std::domain_error::domain_error;
};

// Eta quotient whose prefactor exponent sum(d * r_d) / 24 is not an integer.
struct FractionalPrefactor : std::domain_error {
  using std::domain_error::domain_error;
};

// Exponent bookkeeping left the signed 64-bit range.
struct ExponentOverflow : std::overflow_error {
  ExponentOverflow() : std::overflow_error("series exponent arithmetic overflowed 64 bits") {}
};

// Hauptmodul level outside {2, 3, 4, 5, 7, 13}.
struct UnsupportedLevel : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Claim family id that names no known interval family.
struct UnsupportedFamily : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace etaq
