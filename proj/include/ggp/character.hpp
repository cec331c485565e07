#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "ggp/sign.hpp"

namespace ggp {

/// Data of the base field that the engine needs: the value of omega_{E/F} at -1.
struct BaseFieldData {
  Sign omega_at_minus_one = Sign::plus();

  friend bool operator==(const BaseFieldData&, const BaseFieldData&) = default;
};

struct CharTerm {
  std::string name;
  Grade grade = Grade::Trivial;
  int exponent = 0;

  friend auto operator<=>(const CharTerm&, const CharTerm&) = default;
};

/// A formal character of E^x: a monomial in named unitary generators times a
/// power |.|_E^s with s a half-integer.
///
/// Normal form: terms sorted by generator name, zero exponents dropped. Two
/// characters are equal iff their normal forms agree. Multiplying two
/// characters that declare the same generator with different grades throws
/// GradeConflict.
class CharE {
 public:
  CharE() = default;

  static CharE generator(std::string name, Grade grade, int exponent = 1);
  /// |.|_E^(halves/2).
  static CharE abs_power(int halves);

  CharE operator*(const CharE& other) const;
  CharE& operator*=(const CharE& other);
  CharE inverse() const;
  CharE pow(int k) const;

  Grade restriction_grade() const;
  int slope_halves() const { return slope_halves_; }
  bool unitary() const { return slope_halves_ == 0; }
  bool is_trivial() const { return terms_.empty() && slope_halves_ == 0; }

  int exponent(std::string_view name) const;
  const std::vector<CharTerm>& terms() const { return terms_; }

  CharE unitary_part() const;
  CharE with_slope_halves(int halves) const;

  /// Canonical text, e.g. "chi^-1*chiV*|.|^1/2", or "1" when trivial.
  std::string to_string() const;

  friend auto operator<=>(const CharE&, const CharE&) = default;

 private:
  std::vector<CharTerm> terms_;
  int slope_halves_ = 0;
};

/// Sign of the conjugate-duality of a unitary character: +1 when it is trivial
/// on F^x, -1 when it restricts to omega_{E/F}. Throws NonUnitarySlope when
/// the character carries a |.|_E twist.
Sign conj_dual_sign(const CharE& mu);

/// Text of a half-integer exponent, e.g. "1/2", "-1", "0".
std::string half_integer_to_string(int halves);

}  // namespace ggp
