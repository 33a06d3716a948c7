#pragma once

namespace signet {

// Edge sign, stored as +/-1 so that cycle signs are plain products.
class Sign {
 public:
  constexpr Sign() = default;
  static constexpr Sign plus() { return Sign(+1); }
  static constexpr Sign minus() { return Sign(-1); }
  static constexpr Sign of(int v) { return Sign(v >= 0 ? +1 : -1); }

  constexpr int value() const { return v_; }
  constexpr bool is_positive() const { return v_ > 0; }
  constexpr bool is_negative() const { return v_ < 0; }

  constexpr Sign flipped() const { return Sign(-v_); }

  friend constexpr Sign operator*(Sign a, Sign b) { return Sign(a.v_ * b.v_); }
  friend constexpr bool operator==(Sign a, Sign b) { return a.v_ == b.v_; }

  constexpr char symbol() const { return v_ > 0 ? '+' : '-'; }

 private:
  constexpr explicit Sign(int v) : v_(v) {}
  int v_ = +1;
};

}  // namespace signet
