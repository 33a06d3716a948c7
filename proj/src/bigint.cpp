#include "signet/bigint.hpp"

#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace signet {

namespace {
constexpr uint64_t kBase = 1ull << 32;
}

BigInt::BigInt(long long v) {
  if (v == 0) return;
  sign_ = v > 0 ? 1 : -1;
  unsigned long long u = v > 0 ? static_cast<unsigned long long>(v)
                               : ~static_cast<unsigned long long>(v) + 1ull;
  while (u != 0) {
    mag_.push_back(static_cast<uint32_t>(u & 0xffffffffull));
    u >>= 32;
  }
}

BigInt BigInt::from_string(const std::string& s) {
  size_t i = 0;
  int sign = 1;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
    if (s[i] == '-') sign = -1;
    ++i;
  }
  if (i == s.size()) throw std::invalid_argument("BigInt: empty numeral");
  BigInt r;
  BigInt ten(10);
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("BigInt: bad digit");
    r *= ten;
    r += BigInt(s[i] - '0');
  }
  if (sign < 0) r = -r;
  return r;
}

void BigInt::trim(std::vector<uint32_t>& m) {
  while (!m.empty() && m.back() == 0) m.pop_back();
}

int BigInt::cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

std::vector<uint32_t> BigInt::add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
  const auto& big = a.size() >= b.size() ? a : b;
  const auto& small = a.size() >= b.size() ? b : a;
  std::vector<uint32_t> r;
  r.reserve(big.size() + 1);
  uint64_t carry = 0;
  for (size_t i = 0; i < big.size(); ++i) {
    uint64_t s = carry + big[i] + (i < small.size() ? small[i] : 0u);
    r.push_back(static_cast<uint32_t>(s & 0xffffffffull));
    carry = s >> 32;
  }
  if (carry) r.push_back(static_cast<uint32_t>(carry));
  return r;
}

// requires |a| >= |b|
std::vector<uint32_t> BigInt::sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
  std::vector<uint32_t> r;
  r.reserve(a.size());
  int64_t borrow = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    int64_t d = static_cast<int64_t>(a[i]) - borrow - (i < b.size() ? static_cast<int64_t>(b[i]) : 0);
    if (d < 0) {
      d += static_cast<int64_t>(kBase);
      borrow = 1;
    } else {
      borrow = 0;
    }
    r.push_back(static_cast<uint32_t>(d));
  }
  trim(r);
  return r;
}

std::vector<uint32_t> BigInt::mul_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<uint32_t> r(a.size() + b.size(), 0);
  for (size_t i = 0; i < a.size(); ++i) {
    uint64_t carry = 0;
    for (size_t j = 0; j < b.size(); ++j) {
      uint64_t cur = r[i + j] + carry + static_cast<uint64_t>(a[i]) * b[j];
      r[i + j] = static_cast<uint32_t>(cur & 0xffffffffull);
      carry = cur >> 32;
    }
    size_t k = i + b.size();
    while (carry) {
      uint64_t cur = r[k] + carry;
      r[k] = static_cast<uint32_t>(cur & 0xffffffffull);
      carry = cur >> 32;
      ++k;
    }
  }
  trim(r);
  return r;
}

// Knuth algorithm D. u, v little-endian, v nonempty and trimmed.
void BigInt::divmod_mag(const std::vector<uint32_t>& u, const std::vector<uint32_t>& v,
                        std::vector<uint32_t>& q, std::vector<uint32_t>& r) {
  q.clear();
  r.clear();
  if (cmp_mag(u, v) < 0) {
    r = u;
    return;
  }
  if (v.size() == 1) {
    uint64_t d = v[0];
    q.assign(u.size(), 0);
    uint64_t rem = 0;
    for (size_t i = u.size(); i-- > 0;) {
      uint64_t cur = (rem << 32) | u[i];
      q[i] = static_cast<uint32_t>(cur / d);
      rem = cur % d;
    }
    trim(q);
    if (rem) r.push_back(static_cast<uint32_t>(rem));
    return;
  }

  const int shift = std::countl_zero(v.back());
  const size_t n = v.size();
  std::vector<uint32_t> vn(n), un(u.size() + 1, 0);
  for (size_t i = n; i-- > 0;) {
    vn[i] = (v[i] << shift);
    if (shift && i > 0) vn[i] |= static_cast<uint32_t>(static_cast<uint64_t>(v[i - 1]) >> (32 - shift));
  }
  un[u.size()] = shift ? static_cast<uint32_t>(static_cast<uint64_t>(u.back()) >> (32 - shift)) : 0;
  for (size_t i = u.size(); i-- > 0;) {
    un[i] = (u[i] << shift);
    if (shift && i > 0) un[i] |= static_cast<uint32_t>(static_cast<uint64_t>(u[i - 1]) >> (32 - shift));
  }

  const size_t m = u.size() - n;
  q.assign(m + 1, 0);
  for (size_t j = m + 1; j-- > 0;) {
    uint64_t num = (static_cast<uint64_t>(un[j + n]) << 32) | un[j + n - 1];
    uint64_t qhat = num / vn[n - 1];
    uint64_t rhat = num % vn[n - 1];
    while (qhat >= kBase ||
           qhat * vn[n - 2] > ((rhat << 32) | un[j + n - 2])) {
      --qhat;
      rhat += vn[n - 1];
      if (rhat >= kBase) break;
    }
    // multiply and subtract
    int64_t borrow = 0;
    uint64_t carry = 0;
    for (size_t i = 0; i < n; ++i) {
      uint64_t p = qhat * vn[i] + carry;
      carry = p >> 32;
      int64_t t = static_cast<int64_t>(un[i + j]) - borrow - static_cast<int64_t>(p & 0xffffffffull);
      if (t < 0) {
        t += static_cast<int64_t>(kBase);
        borrow = 1;
      } else {
        borrow = 0;
      }
      un[i + j] = static_cast<uint32_t>(t);
    }
    int64_t t = static_cast<int64_t>(un[j + n]) - borrow - static_cast<int64_t>(carry);
    if (t < 0) {
      // qhat was one too large; add v back
      t += static_cast<int64_t>(kBase);
      --qhat;
      uint64_t c2 = 0;
      for (size_t i = 0; i < n; ++i) {
        uint64_t s = static_cast<uint64_t>(un[i + j]) + vn[i] + c2;
        un[i + j] = static_cast<uint32_t>(s & 0xffffffffull);
        c2 = s >> 32;
      }
      t += static_cast<int64_t>(c2);
      t &= static_cast<int64_t>(kBase) - 1;
    }
    un[j + n] = static_cast<uint32_t>(t);
    q[j] = static_cast<uint32_t>(qhat);
  }
  trim(q);

  r.assign(n, 0);
  for (size_t i = 0; i < n; ++i) {
    r[i] = un[i] >> shift;
    if (shift && i + 1 < un.size()) r[i] |= static_cast<uint32_t>(static_cast<uint64_t>(un[i + 1]) << (32 - shift));
  }
  trim(r);
}

BigInt BigInt::operator-() const {
  BigInt r = *this;
  r.sign_ = -r.sign_;
  return r;
}

BigInt BigInt::abs() const {
  BigInt r = *this;
  if (r.sign_ < 0) r.sign_ = 1;
  return r;
}

BigInt& BigInt::operator+=(const BigInt& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (sign_ == o.sign_) {
    mag_ = add_mag(mag_, o.mag_);
    return *this;
  }
  int c = cmp_mag(mag_, o.mag_);
  if (c == 0) {
    sign_ = 0;
    mag_.clear();
  } else if (c > 0) {
    mag_ = sub_mag(mag_, o.mag_);
  } else {
    mag_ = sub_mag(o.mag_, mag_);
    sign_ = o.sign_;
  }
  return *this;
}

BigInt& BigInt::operator-=(const BigInt& o) { return *this += -o; }

BigInt& BigInt::operator*=(const BigInt& o) { return *this = *this * o; }

BigInt operator*(const BigInt& a, const BigInt& b) {
  BigInt r;
  if (a.is_zero() || b.is_zero()) return r;
  r.sign_ = a.sign_ * b.sign_;
  r.mag_ = BigInt::mul_mag(a.mag_, b.mag_);
  return r;
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
  if (b.is_zero()) throw std::domain_error("BigInt: division by zero");
  std::vector<uint32_t> qm, rm;
  divmod_mag(a.mag_, b.mag_, qm, rm);
  q.mag_ = std::move(qm);
  r.mag_ = std::move(rm);
  q.sign_ = q.mag_.empty() ? 0 : a.sign_ * b.sign_;
  r.sign_ = r.mag_.empty() ? 0 : a.sign_;
}

BigInt operator/(const BigInt& a, const BigInt& b) {
  BigInt q, r;
  BigInt::divmod(a, b, q, r);
  return q;
}

BigInt operator%(const BigInt& a, const BigInt& b) {
  BigInt q, r;
  BigInt::divmod(a, b, q, r);
  return r;
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
  a.sign_ = a.mag_.empty() ? 0 : 1;
  b.sign_ = b.mag_.empty() ? 0 : 1;
  while (!b.is_zero()) {
    BigInt r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

bool operator==(const BigInt& a, const BigInt& b) {
  return a.sign_ == b.sign_ && a.mag_ == b.mag_;
}

std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
  if (a.sign_ != b.sign_) return a.sign_ <=> b.sign_;
  int c = BigInt::cmp_mag(a.mag_, b.mag_);
  if (a.sign_ < 0) c = -c;
  return c <=> 0;
}

int BigInt::compare_abs(const BigInt& a, const BigInt& b) { return cmp_mag(a.mag_, b.mag_); }

std::string BigInt::to_string() const {
  if (is_zero()) return "0";
  std::vector<uint32_t> cur = mag_;
  std::string digits;
  const std::vector<uint32_t> billion = {1000000000u};
  while (!cur.empty()) {
    std::vector<uint32_t> q, r;
    divmod_mag(cur, billion, q, r);
    uint32_t chunk = r.empty() ? 0 : r[0];
    for (int i = 0; i < 9; ++i) {
      digits.push_back(static_cast<char>('0' + chunk % 10));
      chunk /= 10;
    }
    cur = std::move(q);
  }
  while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
  if (sign_ < 0) digits.push_back('-');
  return std::string(digits.rbegin(), digits.rend());
}

double BigInt::to_double() const {
  double r = 0;
  for (size_t i = mag_.size(); i-- > 0;) r = r * 4294967296.0 + mag_[i];
  return sign_ < 0 ? -r : r;
}

long long BigInt::to_long_long() const {
  if (mag_.size() > 2) throw std::overflow_error("BigInt: does not fit in long long");
  unsigned long long u = 0;
  for (size_t i = mag_.size(); i-- > 0;) u = (u << 32) | mag_[i];
  if (sign_ >= 0) {
    if (u > static_cast<unsigned long long>(std::numeric_limits<long long>::max()))
      throw std::overflow_error("BigInt: does not fit in long long");
    return static_cast<long long>(u);
  }
  if (u > static_cast<unsigned long long>(std::numeric_limits<long long>::max()) + 1ull)
    throw std::overflow_error("BigInt: does not fit in long long");
  return -static_cast<long long>(u - 1) - 1;
}

}  // namespace signet
