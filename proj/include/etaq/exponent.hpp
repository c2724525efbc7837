#pragma once

#include <cstdint>

#include "etaq/errors.hpp"

namespace etaq {

// Series exponents. Signed: Laurent windows start below zero.
using Exp = std::int64_t;

inline Exp checked_add(Exp a, Exp b) {
  Exp r;
  if (__builtin_add_overflow(a, b, &r)) throw ExponentOverflow();
  return r;
}

inline Exp checked_sub(Exp a, Exp b) {
  Exp r;
  if (__builtin_sub_overflow(a, b, &r)) throw ExponentOverflow();
  return r;
}

inline Exp checked_mul(Exp a, Exp b) {
  Exp r;
  if (__builtin_mul_overflow(a, b, &r)) throw ExponentOverflow();
  return r;
}

}  // namespace etaq
