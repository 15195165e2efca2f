#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace braidmon {

/// Exact rational with 64-bit numerator/denominator. Used for angles
/// measured in turns (fractions of 2*pi), where float ties would break
/// the coamoeba vertex and parallelogram tests.
struct Rat {
  long long num = 0;
  long long den = 1;

  Rat() = default;
  Rat(long long n) : num(n), den(1) {}
  Rat(long long n, long long d) : num(n), den(d) { reduce(); }

  void reduce() {
    if (den == 0) throw std::invalid_argument("Rat: zero denominator");
    if (den < 0) { num = -num; den = -den; }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
    if (num == 0) den = 1;
  }

  static Rat checked(__int128 n, __int128 d) {
    if (d < 0) { n = -n; d = -d; }
    __int128 a = n < 0 ? -n : n;
    __int128 g = 1;
    { // gcd on __int128
      __int128 x = a, y = d;
      while (y != 0) { __int128 t = x % y; x = y; y = t; }
      g = x == 0 ? 1 : x;
    }
    n /= g; d /= g;
    if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX)
      throw std::overflow_error("Rat: 64-bit overflow");
    Rat r; r.num = (long long)n; r.den = (long long)d;
    if (r.num == 0) r.den = 1;
    return r;
  }

  friend Rat operator+(const Rat& a, const Rat& b) {
    return checked((__int128)a.num * b.den + (__int128)b.num * a.den,
                   (__int128)a.den * b.den);
  }
  friend Rat operator-(const Rat& a, const Rat& b) {
    return checked((__int128)a.num * b.den - (__int128)b.num * a.den,
                   (__int128)a.den * b.den);
  }
  friend Rat operator*(const Rat& a, const Rat& b) {
    return checked((__int128)a.num * b.num, (__int128)a.den * b.den);
  }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.num == 0) throw std::invalid_argument("Rat: division by zero");
    return checked((__int128)a.num * b.den, (__int128)a.den * b.num);
  }
  Rat operator-() const { Rat r; r.num = -num; r.den = den; return r; }

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator<(const Rat& a, const Rat& b) {
    return (__int128)a.num * b.den < (__int128)b.num * a.den;
  }
  friend bool operator<=(const Rat& a, const Rat& b) { return a < b || a == b; }
  friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
  friend bool operator>=(const Rat& a, const Rat& b) { return b <= a; }

  long long floor() const {
    long long q = num / den;
    if (num % den != 0 && num < 0) --q;
    return q;
  }

  /// Wrap into [0,1). Angles on the torus live here.
  Rat mod1() const { return *this - Rat(floor()); }

  double to_double() const { return (double)num / (double)den; }

  std::string str() const {
    return den == 1 ? std::to_string(num)
                    : std::to_string(num) + "/" + std::to_string(den);
  }
};

} // namespace braidmon
