#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sqtile {

using i128 = __int128;
using i64 = std::int64_t;
using u64 = std::uint64_t;

// Raised when an exact result would not fit in 128 bits.
struct OverflowError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when a scaled rational coefficient fails to clear. Never a data
// condition: it means a formula was transcribed wrongly.
struct DivisibilityError : std::logic_error {
  using std::logic_error::logic_error;
};

inline i128 add_ck(i128 a, i128 b) {
  i128 r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("int128 add overflow");
  return r;
}

inline i128 sub_ck(i128 a, i128 b) {
  i128 r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("int128 sub overflow");
  return r;
}

inline i128 mul_ck(i128 a, i128 b) {
  i128 r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("int128 mul overflow");
  return r;
}

inline i128 exact_div(i128 a, i128 d, const char* where) {
  if (d == 0 || a % d != 0)
    throw DivisibilityError(std::string("inexact division in ") + where);
  return a / d;
}

inline i128 abs128(i128 a) { return a < 0 ? -a : a; }

inline i128 gcd128(i128 a, i128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline i64 gcd64(i64 a, i64 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    i64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline i64 gcd64(i64 a, i64 b, i64 c) { return gcd64(gcd64(a, b), c); }

inline std::string to_string(i128 v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  unsigned __int128 u = neg ? (unsigned __int128)(-(v + 1)) + 1 : (unsigned __int128)v;
  std::string s;
  while (u != 0) {
    s.push_back(char('0' + int(u % 10)));
    u /= 10;
  }
  if (neg) s.push_back('-');
  return std::string(s.rbegin(), s.rend());
}

inline i64 to_i64(i128 v) {
  if (v > INT64_MAX || v < INT64_MIN) throw OverflowError("value exceeds 64 bits");
  return (i64)v;
}

}  // namespace sqtile
