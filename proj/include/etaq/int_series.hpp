#pragma once

#include <gmpxx.h>

#include <vector>

#include "etaq/exponent.hpp"
#include "etaq/gf2_series.hpp"

namespace etaq {

// Truncated Laurent series with exact integer coefficients. Same window
// semantics and precision rules as Gf2Series; see that header for the table.
class IntSeries {
 public:
  IntSeries() : val_(0) {}
  IntSeries(Exp val, std::vector<mpz_class> coeffs) : val_(val), c_(std::move(coeffs)) {}

  static IntSeries zero(Exp val, Exp valid_to);
  static IntSeries one(Exp valid_to);
  static IntSeries constant(const mpz_class& v, Exp valid_to);
  static IntSeries monomial(const mpz_class& v, Exp e, Exp valid_to);

  Exp val() const { return val_; }
  Exp valid_to() const { return val_ + Exp(c_.size()) - 1; }
  Exp length() const { return Exp(c_.size()); }

  // Window-contract read: exact zero below val, QueryBeyondPrecision above
  // valid_to.
  const mpz_class& coeff(Exp n) const;

  std::size_t nonzero_count() const;

  IntSeries truncated(Exp new_valid_to) const;
  IntSeries shifted(Exp k) const;
  IntSeries dilated(Exp m) const;
  IntSeries inverse() const;
  IntSeries pow(long long k) const;
  IntSeries scaled(const mpz_class& c) const;

  friend IntSeries operator+(const IntSeries& a, const IntSeries& b);
  friend IntSeries operator*(const IntSeries& a, const IntSeries& b);

  bool operator==(const IntSeries& o) const { return val_ == o.val_ && c_ == o.c_; }

  const std::vector<mpz_class>& coeffs() const { return c_; }

 private:
  Exp val_;
  std::vector<mpz_class> c_;
};

// Parity image: same window, bit n = coeff(n) mod 2.
Gf2Series reduce_mod2(const IntSeries& a);

// True when a and b agree on every exponent in [lo, hi]; both must certify the
// range.
bool agree_on(const IntSeries& a, const IntSeries& b, Exp lo, Exp hi);

}  // namespace etaq
