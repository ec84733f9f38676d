#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "blowup/errors.hpp"

namespace blowup {

// Exact nonnegative rational on int64; all counting quantities (edge counts,
// size products) fit comfortably. Comparisons cross-multiply in 128 bits.
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n, long long d) : num(n), den(d) {
    if (den == 0) fail(Errc::BadParams, "rational with zero denominator");
    if (den < 0) { num = -num; den = -den; }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
  }
  explicit Rational(long long n) : num(n), den(1) {}

  double to_double() const { return double(num) / double(den); }
  long double to_long_double() const { return (long double)num / (long double)den; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return (__int128)a.num * b.den < (__int128)b.num * a.den;
  }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  friend Rational operator*(const Rational& a, const Rational& b) {
    long long g1 = std::gcd(a.num < 0 ? -a.num : a.num, b.den);
    long long g2 = std::gcd(b.num < 0 ? -b.num : b.num, a.den);
    return Rational((a.num / g1) * (b.num / g2), (a.den / g2) * (b.den / g1));
  }
  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num * b.den - b.num * a.den, a.den * b.den);
  }

  std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
};

}  // namespace blowup
