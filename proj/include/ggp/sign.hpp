#pragma once

#include <string>

namespace ggp {

/// An element of {+1, -1} under multiplication.
class Sign {
 public:
  constexpr Sign() = default;

  static constexpr Sign plus() { return Sign(false); }
  static constexpr Sign minus() { return Sign(true); }
  /// (-1)^k.
  static constexpr Sign parity(long long k) { return Sign(k % 2 != 0); }
  static Sign from_int(int value);

  constexpr int value() const { return minus_ ? -1 : 1; }
  constexpr bool is_plus() const { return !minus_; }
  constexpr bool is_minus() const { return minus_; }

  constexpr Sign operator*(Sign other) const { return Sign(minus_ != other.minus_); }
  constexpr Sign& operator*=(Sign other) {
    minus_ = minus_ != other.minus_;
    return *this;
  }
  constexpr Sign operator-() const { return Sign(!minus_); }

  friend constexpr bool operator==(Sign, Sign) = default;

  /// "+1" / "-1".
  std::string to_string() const { return minus_ ? "-1" : "+1"; }

 private:
  constexpr explicit Sign(bool minus) : minus_(minus) {}

  bool minus_ = false;
};

/// Restriction of a character of E^x to F^x: trivial, or the quadratic
/// character of E/F.
enum class Grade { Trivial = 0, Omega = 1 };

constexpr Grade grade_of_power(long long k) { return k % 2 == 0 ? Grade::Trivial : Grade::Omega; }

constexpr Grade operator+(Grade a, Grade b) {
  return (static_cast<int>(a) ^ static_cast<int>(b)) != 0 ? Grade::Omega : Grade::Trivial;
}

constexpr Sign sign_of(Grade g) { return g == Grade::Omega ? Sign::minus() : Sign::plus(); }

constexpr Grade grade_of(Sign s) { return s.is_minus() ? Grade::Omega : Grade::Trivial; }

}  // namespace ggp
