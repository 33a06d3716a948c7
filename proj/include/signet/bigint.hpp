#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace signet {

// Arbitrary-precision signed integer, sign-magnitude with 32-bit limbs.
// Values stay modest here (minors of sparse +-1 matrices), but inertia
// counts must never depend on a word-size assumption.
class BigInt {
 public:
  BigInt() = default;
  BigInt(long long v);

  static BigInt from_string(const std::string& s);

  bool is_zero() const { return mag_.empty(); }
  int signum() const { return sign_; }

  BigInt operator-() const;
  BigInt abs() const;

  BigInt& operator+=(const BigInt& o);
  BigInt& operator-=(const BigInt& o);
  BigInt& operator*=(const BigInt& o);

  friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
  friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }
  friend BigInt operator*(const BigInt& a, const BigInt& b);

  // Truncated division: quotient rounds toward zero, remainder keeps the
  // dividend's sign. Throws std::domain_error on zero divisor.
  static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);
  friend BigInt operator/(const BigInt& a, const BigInt& b);
  friend BigInt operator%(const BigInt& a, const BigInt& b);

  static BigInt gcd(BigInt a, BigInt b);

  friend bool operator==(const BigInt& a, const BigInt& b);
  friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b);

  // Compares |a| with |b|.
  static int compare_abs(const BigInt& a, const BigInt& b);

  std::string to_string() const;
  double to_double() const;

  // Throws std::overflow_error if the value does not fit.
  long long to_long_long() const;

 private:
  int sign_ = 0;                // -1, 0, +1; zero iff mag_ empty
  std::vector<uint32_t> mag_;   // little-endian limbs, no leading zeros

  static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
  static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
  static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
  static std::vector<uint32_t> mul_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
  static void divmod_mag(const std::vector<uint32_t>& u, const std::vector<uint32_t>& v,
                         std::vector<uint32_t>& q, std::vector<uint32_t>& r);
  static void trim(std::vector<uint32_t>& m);
};

}  // namespace signet
