#pragma once

// Small integer helpers shared by the invariant modules. Everything here
// works on std::int64_t and throws std::overflow_error rather than wrapping.

#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace seifsec {

using Int = std::int64_t;

inline Int checked_mul(Int a, Int b) {
  Int r{};
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in multiplication");
  return r;
}

inline Int checked_add(Int a, Int b) {
  Int r{};
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in addition");
  return r;
}

inline Int checked_sub(Int a, Int b) {
  Int r{};
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("integer overflow in subtraction");
  return r;
}

/// Quotient rounded toward negative infinity. Requires b > 0.
inline Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && (a < 0)) --q;
  return q;
}

/// Representative of a mod b in [0, b). Requires b > 0.
inline Int floor_mod(Int a, Int b) {
  Int r = a % b;
  return r < 0 ? r + b : r;
}

inline bool divides(Int a, Int b) { return b % a == 0; }

inline Int gcd(Int a, Int b) { return std::gcd(a, b); }

inline Int lcm(Int a, Int b) {
  if (a == 0 || b == 0) return 0;
  Int g = std::gcd(a, b);
  return checked_mul(a / g, b < 0 ? -b : b);
}

struct Bezout {
  Int g;  // gcd(a, b) >= 0
  Int x;  // a*x + b*y == g
  Int y;
};

/// Extended Euclid on (a, b).
inline Bezout extended_gcd(Int a, Int b) {
  Int old_r = a, r = b;
  Int old_x = 1, x = 0;
  Int old_y = 0, y = 1;
  while (r != 0) {
    Int q = old_r / r;
    Int t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_x - q * x;
    old_x = x;
    x = t;
    t = old_y - q * y;
    old_y = y;
    y = t;
  }
  if (old_r < 0) return {-old_r, -old_x, -old_y};
  return {old_r, old_x, old_y};
}

/// Inverse of a modulo m in [0, m). For m == 1 this is 0.
inline Int mod_inverse(Int a, Int m) {
  if (m <= 0) throw std::invalid_argument("modulus must be positive");
  if (m == 1) return 0;
  Bezout bz = extended_gcd(floor_mod(a, m), m);
  if (bz.g != 1) throw std::invalid_argument("value is not invertible modulo m");
  return floor_mod(bz.x, m);
}

}  // namespace seifsec
