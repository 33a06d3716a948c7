#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "signet/bigint.hpp"
#include "signet/rational.hpp"

using signet::BigInt;
using signet::Rational;

namespace {

__int128 to_i128(const BigInt& b) {
  __int128 r = 0;
  for (char c : b.to_string()) {
    if (c == '-') continue;
    r = r * 10 + (c - '0');
  }
  return b.signum() < 0 ? -r : r;
}

std::string i128_to_string(__int128 v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  std::string s;
  while (u) {
    s.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
    u /= 10;
  }
  if (neg) s.push_back('-');
  return {s.rbegin(), s.rend()};
}

}  // namespace

TEST_CASE("small integer round trips") {
  for (long long v : {0ll, 1ll, -1ll, 42ll, -12345678901234ll, (1ll << 62)}) {
    BigInt b(v);
    CHECK(b.to_string() == std::to_string(v));
    CHECK(b.to_long_long() == v);
  }
}

TEST_CASE("string parsing") {
  CHECK(BigInt::from_string("123456789012345678901234567890").to_string() ==
        "123456789012345678901234567890");
  CHECK(BigInt::from_string("-00042").to_string() == "-42");
  CHECK_THROWS(BigInt::from_string(""));
  CHECK_THROWS(BigInt::from_string("12x"));
}

TEST_CASE("randomized arithmetic against 128-bit integers") {
  std::mt19937_64 rng(20240811);
  auto random_value = [&](int bits) -> __int128 {
    __int128 v = 0;
    for (int i = 0; i < bits; i += 32) v = (v << 32) | static_cast<uint32_t>(rng());
    if (rng() & 1) v = -v;
    return v;
  };
  for (int iter = 0; iter < 3000; ++iter) {
    __int128 x = random_value(32 + static_cast<int>(rng() % 64));
    __int128 y = random_value(32 + static_cast<int>(rng() % 32));
    BigInt bx = BigInt::from_string(i128_to_string(x));
    BigInt by = BigInt::from_string(i128_to_string(y));
    CHECK(to_i128(bx + by) == x + y);
    CHECK(to_i128(bx - by) == x - y);
    if (i128_to_string(x).size() + i128_to_string(y).size() < 38) CHECK(to_i128(bx * by) == x * y);
    if (y != 0) {
      BigInt q, r;
      BigInt::divmod(bx, by, q, r);
      CHECK(to_i128(q) == x / y);
      CHECK(to_i128(r) == x % y);
    }
    CHECK((bx < by) == (x < y));
    CHECK((bx == by) == (x == y));
  }
}

TEST_CASE("big multiplication and division invariants") {
  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 300; ++iter) {
    std::string sx, sy;
    int nx = 1 + static_cast<int>(rng() % 40), ny = 1 + static_cast<int>(rng() % 25);
    sx.push_back(static_cast<char>('1' + rng() % 9));
    for (int i = 1; i < nx; ++i) sx.push_back(static_cast<char>('0' + rng() % 10));
    sy.push_back(static_cast<char>('1' + rng() % 9));
    for (int i = 1; i < ny; ++i) sy.push_back(static_cast<char>('0' + rng() % 10));
    BigInt x = BigInt::from_string(sx), y = BigInt::from_string(sy);
    BigInt q, r;
    BigInt::divmod(x, y, q, r);
    CHECK(q * y + r == x);
    CHECK(BigInt::compare_abs(r, y) < 0);
  }
}

TEST_CASE("gcd") {
  CHECK(BigInt::gcd(BigInt(12), BigInt(18)) == BigInt(6));
  CHECK(BigInt::gcd(BigInt(-12), BigInt(18)) == BigInt(6));
  CHECK(BigInt::gcd(BigInt(0), BigInt(5)) == BigInt(5));
  CHECK(BigInt::gcd(BigInt(0), BigInt(0)) == BigInt(0));
}

TEST_CASE("rationals reduce and compare") {
  Rational a = Rational::of(2, 4);
  CHECK(a.to_string() == "1/2");
  CHECK(Rational::of(-6, -4) == Rational::of(3, 2));
  CHECK(Rational::of(1, -2).signum() == -1);
  CHECK(Rational::of(1, 3) + Rational::of(1, 6) == Rational::of(1, 2));
  CHECK(Rational::of(1, 3) - Rational::of(1, 3) == Rational(0));
  CHECK(Rational::of(2, 3) * Rational::of(3, 2) == Rational(1));
  CHECK(Rational::of(1, 3) / Rational::of(1, 6) == Rational(2));
  CHECK(Rational::of(1, 3) < Rational::of(1, 2));
  CHECK(Rational::of(-1, 3) > Rational::of(-1, 2));
  CHECK(Rational::compare_abs(Rational::of(-3, 2), Rational(1)) > 0);
  CHECK_THROWS(Rational::of(1, 0));
  CHECK_THROWS(Rational(1) / Rational(0));
}

TEST_CASE("rational randomized field laws") {
  std::mt19937_64 rng(99);
  auto rnd = [&] {
    long long n = static_cast<long long>(rng() % 2001) - 1000;
    long long d = 1 + static_cast<long long>(rng() % 999);
    return Rational::of(n, d);
  };
  for (int i = 0; i < 500; ++i) {
    Rational a = rnd(), b = rnd(), c = rnd();
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    if (!b.is_zero()) CHECK(a / b * b == a);
  }
}
