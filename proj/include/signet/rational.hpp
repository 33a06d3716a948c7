#pragma once

#include <compare>
#include <string>

#include "signet/bigint.hpp"

namespace signet {

// Exact rational number. Always stored reduced with a positive denominator.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long v) : num_(v), den_(1) {}
  Rational(BigInt num, BigInt den);

  static Rational of(long long num, long long den) { return Rational(BigInt(num), BigInt(den)); }

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  int signum() const { return num_.signum(); }
  bool is_integer() const;

  Rational operator-() const;
  Rational abs() const;
  Rational reciprocal() const;

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b);
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  // Compares |a| with |b|.
  static int compare_abs(const Rational& a, const Rational& b);

  // "p" for integers, "p/q" otherwise.
  std::string to_string() const;
  double to_double() const;

 private:
  BigInt num_;
  BigInt den_;  // > 0

  void normalize();
};

}  // namespace signet
