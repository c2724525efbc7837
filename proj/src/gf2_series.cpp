#include "etaq/gf2_series.hpp"

#include <array>
#include <stdexcept>

namespace etaq {

namespace {

using Word = Gf2Series::Word;

std::size_t word_count(Exp bits) { return bits <= 0 ? 0 : std::size_t((bits + 63) >> 6); }

void mask_words(std::vector<Word>& w, Exp bits) {
  w.resize(word_count(bits), 0);
  if (bits > 0 && (bits & 63)) w.back() &= (Word(1) << (bits & 63)) - 1;
}

// dst ^= src << offset, truncated to dst's allocation; the caller re-masks the
// tail word afterwards.
void xor_shifted(std::vector<Word>& dst, const std::vector<Word>& src, Exp src_bits, Exp offset) {
  if (src_bits <= 0) return;
  std::size_t nw = word_count(src_bits);
  std::size_t base = std::size_t(offset >> 6);
  int sh = int(offset & 63);
  std::size_t dn = dst.size();
  if (sh == 0) {
    for (std::size_t i = 0; i < nw && base + i < dn; ++i) dst[base + i] ^= src[i];
  } else {
    Word carry = 0;
    std::size_t i = 0;
    for (; i < nw && base + i < dn; ++i) {
      Word v = src[i];
      dst[base + i] ^= (v << sh) | carry;
      carry = v >> (64 - sh);
    }
    if (i == nw && base + i < dn) dst[base + i] ^= carry;
  }
}

std::size_t popcount_range(const std::vector<Word>& w, Exp bits) {
  std::size_t nw = std::min(word_count(bits), w.size());
  std::size_t c = 0;
  for (std::size_t i = 0; i < nw; ++i) {
    Word v = w[i];
    if (i == nw - 1 && (bits & 63)) v &= (Word(1) << (bits & 63)) - 1;
    c += std::size_t(__builtin_popcountll(v));
  }
  return c;
}

// out = x * y mod q^out_bits in index space; iterates the set bits of x, so
// the caller puts the sparser operand first. Shifted copies of y are built
// lazily, one per sub-word offset.
std::vector<Word> mul_words(const std::vector<Word>& xw, Exp x_bits, const std::vector<Word>& yw,
                            Exp y_bits, Exp out_bits) {
  std::vector<Word> out(word_count(out_bits), 0);
  if (out_bits <= 0 || x_bits <= 0 || y_bits <= 0) return out;
  std::array<std::vector<Word>, 64> table;
  auto shifted_y = [&](int t) -> const std::vector<Word>& {
    auto& v = table[std::size_t(t)];
    if (v.empty() && !yw.empty()) {
      if (t == 0) {
        v = yw;
      } else {
        v.assign(yw.size() + 1, 0);
        Word carry = 0;
        for (std::size_t i = 0; i < yw.size(); ++i) {
          v[i] = (yw[i] << t) | carry;
          carry = yw[i] >> (64 - t);
        }
        v[yw.size()] = carry;
      }
    }
    return v;
  };
  std::size_t on = out.size();
  Exp xb = std::min(x_bits, out_bits);
  std::size_t xn = std::min(word_count(xb), xw.size());
  for (std::size_t wi = 0; wi < xn; ++wi) {
    Word w = xw[wi];
    if (wi == xn - 1 && (xb & 63)) w &= (Word(1) << (xb & 63)) - 1;
    while (w) {
      int t = __builtin_ctzll(w);
      w &= w - 1;
      const auto& sy = shifted_y(t);
      for (std::size_t k = 0; k < sy.size() && wi + k < on; ++k) out[wi + k] ^= sy[k];
    }
  }
  mask_words(out, out_bits);
  return out;
}

std::vector<Word> mul_words_auto(const std::vector<Word>& aw, Exp a_bits,
                                 const std::vector<Word>& bw, Exp b_bits, Exp out_bits) {
  if (popcount_range(aw, std::min(a_bits, out_bits)) <= popcount_range(bw, std::min(b_bits, out_bits)))
    return mul_words(aw, a_bits, bw, b_bits, out_bits);
  return mul_words(bw, b_bits, aw, a_bits, out_bits);
}

Word spread32(Word v) {
  v &= 0xFFFFFFFFull;
  v = (v | (v << 16)) & 0x0000FFFF0000FFFFull;
  v = (v | (v << 8)) & 0x00FF00FF00FF00FFull;
  v = (v | (v << 4)) & 0x0F0F0F0F0F0F0F0Full;
  v = (v | (v << 2)) & 0x3333333333333333ull;
  v = (v | (v << 1)) & 0x5555555555555555ull;
  return v;
}

// out = a(q^2) mod q^out_bits: squaring in characteristic 2.
std::vector<Word> square_words(const std::vector<Word>& aw, Exp a_bits, Exp out_bits) {
  std::vector<Word> out(word_count(out_bits), 0);
  if (out_bits <= 0) return out;
  Exp need = std::min(a_bits, (out_bits + 1) / 2);
  std::size_t nw = std::min(word_count(need), aw.size());
  std::size_t on = out.size();
  for (std::size_t i = 0; i < nw; ++i) {
    Word v = aw[i];
    if (i == nw - 1 && (need & 63)) v &= (Word(1) << (need & 63)) - 1;
    if (2 * i < on) out[2 * i] ^= spread32(v);
    if (2 * i + 1 < on) out[2 * i + 1] ^= spread32(v >> 32);
  }
  mask_words(out, out_bits);
  return out;
}

}  // namespace

Gf2Series Gf2Series::zero(Exp val, Exp valid_to) {
  Exp len = checked_sub(valid_to, val) + 1;
  if (len < 0) throw std::invalid_argument("series window needs valid_to >= val - 1");
  return Gf2Series(val, len, std::vector<Word>(word_count(len), 0));
}

Gf2Series Gf2Series::one(Exp valid_to) {
  Gf2Series r = zero(0, valid_to);
  if (r.len_ > 0) r.set_bit(0);
  return r;
}

Gf2Series Gf2Series::from_support(Exp val, Exp valid_to, const std::vector<Exp>& exponents) {
  Gf2Series r = zero(val, valid_to);
  for (Exp e : exponents) {
    if (e < val || e > valid_to) throw std::invalid_argument("support exponent outside the window");
    r.set_bit(e - val);
  }
  return r;
}

void Gf2Series::mask_tail() { mask_words(w_, len_); }

int Gf2Series::coeff(Exp n) const {
  if (n > valid_to()) throw QueryBeyondPrecision(n, valid_to());
  if (n < val_) return 0;
  return bit(n - val_) ? 1 : 0;
}

std::size_t Gf2Series::popcount() const {
  std::size_t c = 0;
  for (Word v : w_) c += std::size_t(__builtin_popcountll(v));
  return c;
}

std::vector<Exp> Gf2Series::support(Exp lo, Exp hi) const {
  std::vector<Exp> out;
  for_each_set(lo, hi, [&](Exp e) { out.push_back(e); });
  return out;
}

Gf2Series Gf2Series::truncated(Exp new_valid_to) const {
  if (new_valid_to > valid_to() || new_valid_to < val_ - 1)
    throw std::invalid_argument("truncation target outside [val - 1, valid_to]");
  Exp len = new_valid_to - val_ + 1;
  std::vector<Word> w(w_.begin(), w_.begin() + std::ptrdiff_t(word_count(len)));
  mask_words(w, len);
  return Gf2Series(val_, len, std::move(w));
}

Gf2Series Gf2Series::shifted(Exp k) const { return Gf2Series(checked_add(val_, k), len_, w_); }

Gf2Series Gf2Series::dilated(Exp m) const {
  if (m < 1) throw std::invalid_argument("dilation factor must be >= 1");
  Exp nval = checked_mul(val_, m);
  Exp nT = checked_add(checked_mul(valid_to(), m), m - 1);
  Exp nlen = nT - nval + 1;
  Gf2Series r(nval, nlen, std::vector<Word>(word_count(nlen), 0));
  for_each_set(val_, valid_to(), [&](Exp e) { r.set_bit((e - val_) * m); });
  return r;
}

Gf2Series Gf2Series::inverse() const {
  if (len_ < 1 || !bit(0))
    throw NonUnitLeadingCoefficient("inverse needs leading stored coefficient 1 over GF(2)");
  Exp L = len_;
  std::vector<Word> x{1};
  Exp cert = 1;
  while (cert < L) {
    Exp next = std::min(L, cert * 2);
    // If a*x = 1 mod q^cert then a*(a*x^2) = (a*x)^2 = 1 mod q^(2*cert).
    auto sq = square_words(x, cert, next);
    x = mul_words_auto(w_, std::min<Exp>(len_, next), sq, next, next);
    cert = next;
  }
  return Gf2Series(checked_sub(0, val_), L, std::move(x));
}

Gf2Series Gf2Series::pow(long long k) const {
  if (k == 0) return one(checked_sub(valid_to(), val_));
  if (k < 0) return inverse().pow(-k);
  Exp rval = checked_mul(val_, Exp(k));
  Exp L = len_;
  if (L <= 0) return Gf2Series(rval, 0, {});
  std::vector<Word> res(word_count(L), 0);
  res[0] = 1;
  std::vector<Word> base = w_;
  unsigned long long e = static_cast<unsigned long long>(k);
  while (e) {
    if (e & 1) res = mul_words_auto(res, L, base, L, L);
    e >>= 1;
    if (e) base = square_words(base, L, L);
  }
  return Gf2Series(rval, L, std::move(res));
}

Gf2Series Gf2Series::with_flipped_bit(Exp n) const {
  if (n < val_ || n > valid_to()) throw std::invalid_argument("flip position outside the window");
  Gf2Series r = *this;
  r.w_[std::size_t((n - val_) >> 6)] ^= Word(1) << ((n - val_) & 63);
  return r;
}

Gf2Series operator+(const Gf2Series& a, const Gf2Series& b) {
  Exp val = std::min(a.val_, b.val_);
  Exp T = std::min(a.valid_to(), b.valid_to());
  Exp len = T - val + 1;
  if (len < 0) len = 0;
  Gf2Series r(val, len, std::vector<Word>(word_count(len), 0));
  xor_shifted(r.w_, a.w_, std::min<Exp>(a.len_, T - a.val_ + 1), a.val_ - val);
  xor_shifted(r.w_, b.w_, std::min<Exp>(b.len_, T - b.val_ + 1), b.val_ - val);
  r.mask_tail();
  return r;
}

Gf2Series operator*(const Gf2Series& a, const Gf2Series& b) {
  Exp val = checked_add(a.val_, b.val_);
  Exp T = std::min(checked_add(a.valid_to(), b.val_), checked_add(b.valid_to(), a.val_));
  Exp len = T - val + 1;
  if (len < 0) len = 0;
  return Gf2Series(val, len, mul_words_auto(a.w_, a.len_, b.w_, b.len_, len));
}

Gf2Series gf2_square(const Gf2Series& a) {
  Exp val = checked_mul(a.val_, 2);
  Exp len = a.len_;
  return Gf2Series(val, len, square_words(a.w_, a.len_, len));
}

bool agree_on(const Gf2Series& a, const Gf2Series& b, Exp lo, Exp hi) {
  if (lo > hi) return true;
  if (a.valid_to() < hi) throw QueryBeyondPrecision(hi, a.valid_to());
  if (b.valid_to() < hi) throw QueryBeyondPrecision(hi, b.valid_to());
  auto chunk = [](const Gf2Series& s, Exp from, int n) -> Word {
    Word out = 0;
    Exp r = from - s.val();
    const auto& w = s.words();
    if (r >= 0) {
      std::size_t wi = std::size_t(r >> 6);
      int sh = int(r & 63);
      Word lo_w = wi < w.size() ? w[wi] >> sh : 0;
      Word hi_w = (sh && wi + 1 < w.size()) ? w[wi + 1] << (64 - sh) : 0;
      out = lo_w | hi_w;
    } else if (-r < 64) {
      out = (w.empty() ? 0 : w[0]) << -r;
    }
    if (n < 64) out &= (Word(1) << n) - 1;
    return out;
  };
  for (Exp p = lo; p <= hi; p += 64) {
    int n = int(std::min<Exp>(64, hi - p + 1));
    if (chunk(a, p, n) != chunk(b, p, n)) return false;
  }
  return true;
}

Gf2Series inverse_naive(const Gf2Series& a) {
  if (a.length() < 1 || !a.coeff(a.val()))
    throw NonUnitLeadingCoefficient("inverse needs leading stored coefficient 1 over GF(2)");
  Exp L = a.length();
  std::vector<Word> b(word_count(L), 0);
  b[0] = 1;
  std::vector<Exp> aset;
  a.for_each_set(a.val() + 1, a.valid_to(), [&](Exp e) { aset.push_back(e - a.val()); });
  for (Exp n = 1; n < L; ++n) {
    int acc = 0;
    for (Exp j : aset) {
      if (j > n) break;
      acc ^= int((b[std::size_t((n - j) >> 6)] >> ((n - j) & 63)) & 1);
    }
    if (acc) b[std::size_t(n >> 6)] |= Word(1) << (n & 63);
  }
  return Gf2Series(checked_sub(0, a.val()), L, std::move(b));
}

}  // namespace etaq
