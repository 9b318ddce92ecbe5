#pragma once

#include <numeric>
#include <string>

#include "equisym/errors.hpp"

namespace equisym {

// Exact fraction on 64-bit integers. Riemann-Hurwitz bookkeeping at desk
// scale never leaves the low tens of bits, so no bignum is needed.
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n) : num(n), den(1) {}  // NOLINT: implicit by design
  Rational(long long n, long long d) : num(n), den(d) {
    if (den == 0) fail("rational with zero denominator");
    normalize();
  }

  void normalize() {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    if (num == 0) den = 1;
  }

  bool is_integer() const { return den == 1; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return {a.num * b.den + b.num * a.den, a.den * b.den};
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return {a.num * b.den - b.num * a.den, a.den * b.den};
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return {a.num * b.num, a.den * b.den};
  }
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num * b.den < b.num * a.den;
  }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return a.num * b.den <= b.num * a.den;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) { return b <= a; }

  std::string str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }
};

}  // namespace equisym
