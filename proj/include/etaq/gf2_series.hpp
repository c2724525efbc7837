#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "etaq/exponent.hpp"

namespace etaq {

// Truncated Laurent series over GF(2), coefficients packed 64 per word.
//
// A series tracks a window [val, valid_to]: coefficients below val are exactly
// zero, stored bits cover the window, anything above valid_to is unknown.
// Invariant: valid_to >= val - 1, the empty window being the zero series at
// that precision. Every operation derives the result window from its inputs,
// so a stored bit is always a certified coefficient:
//   add      val = min(vals),  valid_to = min(valid_tos)
//   mul      val = va + vb,    valid_to = min(Ta + vb, Tb + va)
//   inverse  val = -va,        valid_to = Ta - 2*va   (leading bit must be 1)
//   pow k    val = k*va,       valid_to = Ta + (k-1)*va   (k != 0; k = 0 gives
//            the constant 1 on [0, Ta - va])
//   dilate m val = m*va,       valid_to = m*Ta + m - 1
class Gf2Series {
 public:
  using Word = std::uint64_t;

  Gf2Series() : val_(0), len_(0) {}

  static Gf2Series zero(Exp val, Exp valid_to);
  static Gf2Series one(Exp valid_to);
  static Gf2Series from_support(Exp val, Exp valid_to, const std::vector<Exp>& exponents);

  Exp val() const { return val_; }
  Exp valid_to() const { return val_ + len_ - 1; }
  Exp length() const { return len_; }

  // Window-contract read: exact zero below val, QueryBeyondPrecision above
  // valid_to.
  int coeff(Exp n) const;

  std::size_t popcount() const;
  std::vector<Exp> support(Exp lo, Exp hi) const;
  template <typename Fn>
  void for_each_set(Exp lo, Exp hi, Fn&& fn) const;

  Gf2Series truncated(Exp new_valid_to) const;
  Gf2Series shifted(Exp k) const;   // multiply by q^k
  Gf2Series dilated(Exp m) const;   // q -> q^m, m >= 1
  Gf2Series inverse() const;
  Gf2Series pow(long long k) const;
  Gf2Series with_flipped_bit(Exp n) const;  // n must lie in [val, valid_to]

  friend Gf2Series operator+(const Gf2Series& a, const Gf2Series& b);  // xor
  friend Gf2Series operator*(const Gf2Series& a, const Gf2Series& b);

  bool operator==(const Gf2Series& o) const {
    return val_ == o.val_ && len_ == o.len_ && w_ == o.w_;
  }

  const std::vector<Word>& words() const { return w_; }

 private:
  Exp val_;
  Exp len_;  // valid_to = val_ + len_ - 1
  std::vector<Word> w_;

  Gf2Series(Exp val, Exp len, std::vector<Word> w) : val_(val), len_(len), w_(std::move(w)) {}

  bool bit(Exp idx) const { return (w_[std::size_t(idx >> 6)] >> (idx & 63)) & 1; }
  void set_bit(Exp idx) { w_[std::size_t(idx >> 6)] |= Word(1) << (idx & 63); }
  void mask_tail();

  friend Gf2Series gf2_square(const Gf2Series& a);
  friend Gf2Series inverse_naive(const Gf2Series& a);
};

// Exact Frobenius shortcut: over GF(2), a^2 = a(q^2). Window follows the mul
// rule, so the result is interchangeable with a * a.
Gf2Series gf2_square(const Gf2Series& a);

// True when a and b agree on every exponent in [lo, hi]. Both series must
// certify the whole range.
bool agree_on(const Gf2Series& a, const Gf2Series& b, Exp lo, Exp hi);

// Quadratic term-by-term inverse with the same window contract as
// Gf2Series::inverse; retained as an oracle for the production path.
Gf2Series inverse_naive(const Gf2Series& a);

template <typename Fn>
void Gf2Series::for_each_set(Exp lo, Exp hi, Fn&& fn) const {
  if (len_ == 0) return;
  Exp ilo = std::max<Exp>(lo - val_, 0);
  Exp ihi = std::min<Exp>(hi - val_, len_ - 1);
  if (ilo > ihi) return;
  for (Exp wi = ilo >> 6; wi <= (ihi >> 6); ++wi) {
    Word w = w_[std::size_t(wi)];
    if (wi == (ilo >> 6)) w &= ~Word(0) << (ilo & 63);
    if (wi == (ihi >> 6) && (ihi & 63) != 63) w &= (Word(1) << ((ihi & 63) + 1)) - 1;
    while (w) {
      int b = __builtin_ctzll(w);
      fn(val_ + (wi << 6) + b);
      w &= w - 1;
    }
  }
}

}  // namespace etaq
