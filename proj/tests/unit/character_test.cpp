#include "doctest.h"

#include "ggp/character.hpp"
#include "ggp/error.hpp"
#include "helpers.hpp"

using namespace ggp;
using fixtures::chi;

TEST_CASE("conj_dual_sign follows the restriction grade") {
  CHECK(conj_dual_sign(chi()) == Sign::minus());
  // chi_w with n even restricts trivially.
  CHECK(conj_dual_sign(chi(4)) == Sign::plus());
  // chi_v^-1 chi_w with dim V = n + 1, dim W = n.
  const int n = 3;
  CHECK(conj_dual_sign(chi(n + 1).inverse() * chi(n)) == Sign::minus());
  CHECK_THROWS_AS(conj_dual_sign(CharE::abs_power(1)), Error);
  try {
    conj_dual_sign(chi() * CharE::abs_power(-1));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonUnitarySlope);
  }
}

TEST_CASE("characters have a normal form") {
  const CharE a = chi(2) * fixtures::chi_w() * CharE::abs_power(1);
  const CharE b = CharE::abs_power(1) * fixtures::chi_w() * chi() * chi();
  CHECK(a == b);
  CHECK(a.to_string() == b.to_string());
  CHECK((a * a.inverse()).is_trivial());
  CHECK(a.inverse().inverse() == a);
  CHECK(chi(3).exponent("chi") == 3);
  CHECK(chi(2).inverse() * chi(2) == CharE());
  CHECK(CharE().to_string() == "1");
}

TEST_CASE("restriction grade is additive") {
  for (int i = -3; i <= 3; ++i) {
    for (int j = -3; j <= 3; ++j) {
      const CharE x = chi(i) * fixtures::chi_v(j);
      CHECK(x.restriction_grade() == grade_of_power(i));
      CHECK((x * chi()).restriction_grade() == grade_of_power(i + 1));
    }
  }
}

TEST_CASE("product is commutative and associative") {
  const CharE x = chi(2) * CharE::abs_power(1);
  const CharE y = fixtures::chi_v(-1);
  const CharE z = fixtures::chi_w(3) * CharE::abs_power(-3);
  CHECK(x * y == y * x);
  CHECK((x * y) * z == x * (y * z));
}

TEST_CASE("a generator declared with two grades is rejected") {
  const CharE odd = CharE::generator("eta", Grade::Omega);
  const CharE even = CharE::generator("eta", Grade::Trivial);
  try {
    (void)(odd * even);
    FAIL("expected GradeConflict");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::GradeConflict);
  }
}

TEST_CASE("half-integer text") {
  CHECK(half_integer_to_string(1) == "1/2");
  CHECK(half_integer_to_string(-1) == "-1/2");
  CHECK(half_integer_to_string(4) == "2");
  CHECK(half_integer_to_string(0) == "0");
}
