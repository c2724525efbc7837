#include "etaq/int_series.hpp"

#include <stdexcept>

namespace etaq {

namespace {
const mpz_class kZero = 0;

Exp window_len(Exp val, Exp valid_to) {
  Exp len = checked_sub(valid_to, val) + 1;
  if (len < 0) throw std::invalid_argument("series window needs valid_to >= val - 1");
  return len;
}
}  // namespace

IntSeries IntSeries::zero(Exp val, Exp valid_to) {
  return IntSeries(val, std::vector<mpz_class>(std::size_t(window_len(val, valid_to))));
}

IntSeries IntSeries::one(Exp valid_to) { return constant(1, valid_to); }

IntSeries IntSeries::constant(const mpz_class& v, Exp valid_to) {
  IntSeries r = zero(0, valid_to);
  if (!r.c_.empty()) r.c_[0] = v;
  return r;
}

IntSeries IntSeries::monomial(const mpz_class& v, Exp e, Exp valid_to) {
  IntSeries r = zero(e, valid_to);
  if (!r.c_.empty()) r.c_[0] = v;
  return r;
}

const mpz_class& IntSeries::coeff(Exp n) const {
  if (n > valid_to()) throw QueryBeyondPrecision(n, valid_to());
  if (n < val_) return kZero;
  return c_[std::size_t(n - val_)];
}

std::size_t IntSeries::nonzero_count() const {
  std::size_t c = 0;
  for (const auto& v : c_)
    if (v != 0) ++c;
  return c;
}

IntSeries IntSeries::truncated(Exp new_valid_to) const {
  if (new_valid_to > valid_to() || new_valid_to < val_ - 1)
    throw std::invalid_argument("truncation target outside [val - 1, valid_to]");
  return IntSeries(val_, std::vector<mpz_class>(c_.begin(), c_.begin() + (new_valid_to - val_ + 1)));
}

IntSeries IntSeries::shifted(Exp k) const { return IntSeries(checked_add(val_, k), c_); }

IntSeries IntSeries::dilated(Exp m) const {
  if (m < 1) throw std::invalid_argument("dilation factor must be >= 1");
  Exp nval = checked_mul(val_, m);
  Exp nT = checked_add(checked_mul(valid_to(), m), m - 1);
  std::vector<mpz_class> c(std::size_t(nT - nval + 1));
  for (std::size_t i = 0; i < c_.size(); ++i) c[i * std::size_t(m)] = c_[i];
  return IntSeries(nval, std::move(c));
}

IntSeries IntSeries::inverse() const {
  if (c_.empty() || (c_[0] != 1 && c_[0] != -1))
    throw NonUnitLeadingCoefficient("inverse needs leading stored coefficient +1 or -1 over INT");
  std::size_t L = c_.size();
  std::vector<mpz_class> b(L);
  b[0] = c_[0];  // 1/(+-1) = +-1
  mpz_class acc;
  for (std::size_t n = 1; n < L; ++n) {
    acc = 0;
    std::size_t jmax = std::min(n, L - 1);
    for (std::size_t j = 1; j <= jmax; ++j) {
      if (c_[j] == 0) continue;
      mpz_addmul(acc.get_mpz_t(), c_[j].get_mpz_t(), b[n - j].get_mpz_t());
    }
    if (c_[0] == 1) {
      b[n] = -acc;
    } else {
      b[n] = acc;
    }
  }
  return IntSeries(checked_sub(0, val_), std::move(b));
}

IntSeries IntSeries::pow(long long k) const {
  if (k == 0) return one(checked_sub(valid_to(), val_));
  if (k < 0) return inverse().pow(-k);
  IntSeries base = *this;
  IntSeries res;
  bool have = false;
  unsigned long long e = static_cast<unsigned long long>(k);
  while (e) {
    if (e & 1) {
      res = have ? res * base : base;
      have = true;
    }
    e >>= 1;
    if (e) base = base * base;
  }
  return res;
}

IntSeries IntSeries::scaled(const mpz_class& c) const {
  std::vector<mpz_class> out(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) out[i] = c_[i] * c;
  return IntSeries(val_, std::move(out));
}

IntSeries operator+(const IntSeries& a, const IntSeries& b) {
  Exp val = std::min(a.val_, b.val_);
  Exp T = std::min(a.valid_to(), b.valid_to());
  Exp len = T - val + 1;
  if (len < 0) len = 0;
  std::vector<mpz_class> c(static_cast<std::size_t>(len));
  for (Exp i = 0; i < len; ++i) {
    Exp e = val + i;
    if (e >= a.val_ && e <= a.valid_to()) c[std::size_t(i)] += a.c_[std::size_t(e - a.val_)];
    if (e >= b.val_ && e <= b.valid_to()) c[std::size_t(i)] += b.c_[std::size_t(e - b.val_)];
  }
  return IntSeries(val, std::move(c));
}

IntSeries operator*(const IntSeries& a, const IntSeries& b) {
  Exp val = checked_add(a.val_, b.val_);
  Exp T = std::min(checked_add(a.valid_to(), b.val_), checked_add(b.valid_to(), a.val_));
  Exp len = T - val + 1;
  if (len < 0) len = 0;
  std::vector<mpz_class> c(static_cast<std::size_t>(len));
  const IntSeries& outer = a.nonzero_count() <= b.nonzero_count() ? a : b;
  const IntSeries& inner = (&outer == &a) ? b : a;
  Exp on = outer.length(), in = inner.length();
  for (Exp i = 0; i < on && i < len; ++i) {
    const mpz_class& oc = outer.c_[std::size_t(i)];
    if (oc == 0) continue;
    Exp jmax = std::min(in, len - i);
    for (Exp j = 0; j < jmax; ++j) {
      const mpz_class& ic = inner.c_[std::size_t(j)];
      if (ic == 0) continue;
      mpz_addmul(c[std::size_t(i + j)].get_mpz_t(), oc.get_mpz_t(), ic.get_mpz_t());
    }
  }
  return IntSeries(val, std::move(c));
}

Gf2Series reduce_mod2(const IntSeries& a) {
  std::vector<Exp> odd;
  for (std::size_t i = 0; i < a.coeffs().size(); ++i)
    if (mpz_odd_p(a.coeffs()[i].get_mpz_t())) odd.push_back(a.val() + Exp(i));
  return Gf2Series::from_support(a.val(), a.valid_to(), odd);
}

bool agree_on(const IntSeries& a, const IntSeries& b, Exp lo, Exp hi) {
  if (lo > hi) return true;
  if (a.valid_to() < hi) throw QueryBeyondPrecision(hi, a.valid_to());
  if (b.valid_to() < hi) throw QueryBeyondPrecision(hi, b.valid_to());
  for (Exp n = lo; n <= hi; ++n)
    if (a.coeff(n) != b.coeff(n)) return false;
  return true;
}

}  // namespace etaq
