#include "doctest.h"

#include <algorithm>

#include "ggp/error.hpp"
#include "ggp/parameter.hpp"
#include "helpers.hpp"

using namespace ggp;
using fixtures::atom;
using fixtures::chi;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::EngineInvariant;
}

}  // namespace

TEST_CASE("twisting summands") {
  const Summand a = atom("A", 2);
  CHECK(twist(twist(a, chi(3)), chi(3).inverse()) == a);
  const Summand ac = twist(a, chi());
  CHECK(ac.duality() == Duality::Minus);
  CHECK(ac.tempered());
  const Summand w = twist(Summand::character(chi(3)), CharE::abs_power(1));
  CHECK(w.duality() == Duality::None);
  CHECK_FALSE(w.tempered());
  CHECK(Summand::character(chi()).as_character() == chi());
  CHECK(Summand::character(chi()).dim() == 1);
}

TEST_CASE("twist sign rule") {
  for (Duality d : {Duality::Plus, Duality::Minus}) {
    for (int k = -2; k <= 2; ++k) {
      const Summand s = atom("X", 1, d);
      const Sign base = d == Duality::Plus ? Sign::plus() : Sign::minus();
      const Sign expected = base * conj_dual_sign(chi(k));
      CHECK(twist(s, chi(k)).duality() == (expected.is_plus() ? Duality::Plus : Duality::Minus));
    }
  }
}

TEST_CASE("dual is an involution") {
  const Summand n = atom("N", 2, Duality::None);
  CHECK(dual(n).label() == "N~");
  CHECK(dual(dual(n)) == n);
  const Summand p = twist(atom("P", 1), chi(2));
  CHECK(dual(p).twist() == chi(-2));
  CHECK(dual(dual(p)) == p);
}

TEST_CASE("mk_parameter validates") {
  const LParameter phi = fixtures::phi1_AB();
  CHECK(phi.rank() == 3);
  CHECK(phi.discrete());
  CHECK(phi.tempered());
  CHECK(phi.dimension() == 3);

  CHECK(kind_of([] { mk_parameter({{atom("A", 1), 2}, {atom("B", 2), 1}}, {}, skew_hermitian(3)); }) ==
        ErrorKind::DimensionMismatch);
  CHECK(kind_of([] { mk_parameter({{atom("A", 3, Duality::Minus), 1}}, {}, skew_hermitian(3)); }) ==
        ErrorKind::WrongDualitySign);
  ParameterFlags sc;
  sc.supercuspidal_packet = true;
  CHECK(kind_of([&] { mk_parameter({{atom("A", 1), 3}}, {}, skew_hermitian(3), sc); }) ==
        ErrorKind::FlagContradiction);
  ParameterFlags wrong;
  wrong.discrete = true;
  CHECK(kind_of([&] { mk_parameter({{atom("A", 1), 3}}, {}, skew_hermitian(3), wrong); }) ==
        ErrorKind::FlagContradiction);
}

TEST_CASE("normal form does not depend on input order") {
  const std::vector<Block> blocks = {{atom("C", 1), 1}, {atom("A", 1), 1}, {atom("B", 1), 1}, {atom("A", 1), 2}};
  const LParameter ref = mk_parameter(blocks, {}, hermitian(5));
  std::vector<int> order = {0, 1, 2, 3};
  do {
    std::vector<Block> permuted;
    for (int i : order) permuted.push_back(blocks[i]);
    CHECK(mk_parameter(permuted, {}, hermitian(5)) == ref);
  } while (std::next_permutation(order.begin(), order.end()));
  CHECK(multiplicity_of(ref, atom("A", 1)) == 3);
  CHECK(ref.blocks().size() == 3);
}

TEST_CASE("multiplicity queries") {
  const LParameter phi = fixtures::phi1_AB();
  CHECK(multiplicity_of(phi, atom("A", 1)) == 1);
  CHECK(multiplicity_of(phi, atom("Z", 2)) == 0);
  const Summand w = Summand::character(chi(3));
  const LParameter two = mk_parameter({{w, 2}, {twist(atom("D", 2), chi()), 1}}, {}, hermitian(4));
  CHECK(multiplicity_of(two, w) == 2);
  CHECK(multiplicity_of(tensor_twist(two, chi(2)), twist(w, chi(2))) == 2);
}

TEST_CASE("remove, twist and dual") {
  const Summand w = Summand::character(chi(3));
  const Summand c = twist(atom("C", 3), chi(-1));
  const LParameter phi = mk_parameter({{c, 1}, {w, 1}}, {}, hermitian(4));
  const LParameter rest = remove_once(phi, w);
  CHECK(rest.rank() == 3);
  CHECK(rest.blocks().size() == 1);
  CHECK(rest.blocks()[0].summand == c);
  CHECK(kind_of([&] { remove_once(phi, atom("Q", 1)); }) == ErrorKind::NotContained);

  const CharE mu = chi(5) * fixtures::chi_v(2);
  CHECK(tensor_twist(tensor_twist(phi, mu), mu.inverse()) == phi);
  CHECK(contragredient(contragredient(phi)) == phi);

  const LParameter odd_twist = tensor_twist(fixtures::phi1_AB(), chi());
  for (const auto& b : odd_twist.blocks()) CHECK(b.summand.duality() == Duality::Minus);
}

TEST_CASE("dual-pair blocks count twice") {
  const Summand x = twist(Summand::character(chi(3)), CharE::abs_power(1));
  const LParameter phi =
      mk_parameter({{twist(atom("A", 1), chi(-2)), 1}, {twist(atom("B", 2), chi(-2)), 1}}, {{x, 1}}, hermitian(5));
  CHECK(phi.dimension() == 5);
  CHECK_FALSE(phi.tempered());
  CHECK_FALSE(phi.discrete());
  CHECK(multiplicity_of(phi, x) == 0);
  CHECK(kind_of([] { mk_parameter({}, {}, hermitian(1)); }) == ErrorKind::EmptyParameter);
}
