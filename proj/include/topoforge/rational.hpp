#pragma once

#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <string>

namespace topoforge {

// Exact rational with int64 parts. Distance sums stay far below 2^60 for the
// graph sizes handled here (N <= a few thousand), so no big-int machinery.
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n, long long d) : num(n), den(d) { normalize(); }
  explicit Rational(long long n) : num(n), den(1) {}

  void normalize() {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    if (num == 0) den = 1;
  }

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num * b.den - b.num * a.den, a.den * b.den);
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
  }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  // Decimal rendering with round-half-up, done in integer arithmetic so the
  // printed tables are bit-exact across platforms.
  std::string to_fixed(int precision) const {
    long long scale = 1;
    for (int i = 0; i < precision; ++i) scale *= 10;
    bool neg = num < 0;
    __int128 n = neg ? -static_cast<__int128>(num) : static_cast<__int128>(num);
    __int128 q = (2 * n * scale + den) / (2 * static_cast<__int128>(den));
    long long whole = static_cast<long long>(q / scale);
    long long frac = static_cast<long long>(q % scale);
    std::string s = neg && (whole != 0 || frac != 0) ? "-" : "";
    s += std::to_string(whole);
    if (precision > 0) {
      std::string f = std::to_string(frac);
      s += "." + std::string(precision - f.size(), '0') + f;
    }
    return s;
  }
};

}  // namespace topoforge
