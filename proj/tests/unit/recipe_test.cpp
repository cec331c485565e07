#include "doctest.h"

#include "ggp/error.hpp"
#include "ggp/recipe.hpp"
#include "ggp/seesaw.hpp"
#include "helpers.hpp"

using namespace ggp;
using fixtures::atom;
using fixtures::chi;

namespace {

// n = 3 with chi_v = chi^5, chi_w = chi^3: twist = chi^-5 chi chi^3 = chi^-1.
GgpSetting n3() { return identified_setting(3, chi()); }

LParameter phi_C() {
  return mk_parameter({{twist(atom("C", 3), chi(-1)), 1}, {Summand::character(chi(3)), 1}}, {}, hermitian(4));
}

Sign value_at(const SChar& eta, const LParameter& phi, const Summand& s) {
  return eta.at(*component_group(phi).index_of(s));
}

}  // namespace

TEST_CASE("setting characters") {
  const GgpSetting s = n3();
  CHECK(s.chi_v == chi(5));
  CHECK(s.chi_w == chi(3));
  CHECK(s.recover_twist() == chi(-1));
  CHECK(s.doubling_character() == chi(4));
  CHECK(s.fj_tag() == PsiTag::psi2E);
  CHECK(identified_setting(2, chi()).fj_tag() == PsiTag::psiE);
  GgpSetting bad = s;
  bad.chi = chi(2);
  CHECK_THROWS_AS(bad.validate(), Error);
}

TEST_CASE("Bessel recipe") {
  const LParameter d = mk_parameter({{atom("P", 1), 1}}, {}, skew_hermitian(1));
  const LParameter h = mk_parameter({{twist(atom("Q", 2), chi()), 1}}, {}, hermitian(2));
  const CharPair trivial = bessel_eta(d, h, EpsilonOracle());
  CHECK(trivial.diamond == SChar::trivial(1));
  CHECK(trivial.heart == SChar::trivial(1));

  TableBackend table;
  table.set(AtomKey::of({atom("P", 1), twist(atom("Q", 2), chi())}), PsiTag::psiNeg2E, Sign::minus());
  const CharPair single = bessel_eta(d, h, EpsilonOracle(table));
  CHECK(single.diamond == SChar{{Sign::minus()}});
  CHECK(single.heart == SChar{{Sign::minus()}});
}

TEST_CASE("Bessel recipe is biadditive in the second factor") {
  const LParameter d = mk_parameter({{atom("P", 1), 1}}, {}, skew_hermitian(1));
  const Summand s1 = twist(atom("S", 1), chi());
  const Summand s2 = twist(atom("T", 1), chi());
  const LParameter h = mk_parameter({{s1, 1}, {s2, 1}}, {}, hermitian(2));
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const EpsilonOracle o(HashedBackend{seed});
    const Sign direct = o.atom(AtomKey::of({atom("P", 1), s1}), PsiTag::psiNeg2E) *
                        o.atom(AtomKey::of({atom("P", 1), s2}), PsiTag::psiNeg2E);
    CHECK(bessel_eta(d, h, o).diamond.at(0) == direct);
  }
}

TEST_CASE("Fourier-Jacobi recipe routes the tag by parity") {
  const LParameter d = mk_parameter({{atom("P", 1), 1}}, {}, skew_hermitian(1));
  const LParameter h = mk_parameter({{atom("Q", 1), 1}}, {}, skew_hermitian(1));
  const CharPair trivial = fj_eta(d, h, 1, chi(), EpsilonOracle());
  CHECK(trivial.diamond == SChar::trivial(1));

  TableBackend table;
  table.set(AtomKey::of({atom("P", 1), twist(atom("Q", 1), chi(-1))}), PsiTag::psi2E, Sign::minus());
  const EpsilonOracle o(table);
  CHECK(fj_eta(d, h, 1, chi(), o).diamond == SChar{{Sign::minus()}});
  CHECK_THROWS_AS(fj_eta(d, h, 2, chi(), o), Error);
}

TEST_CASE("recovering phi2") {
  const GgpSetting s = n3();
  const LParameter phi2 = recover_phi2(phi_C(), s);
  CHECK(phi2 == mk_parameter({{atom("C", 3), 1}}, {}, skew_hermitian(3)));
  CHECK(add_summand(tensor_twist(phi2, s.recover_twist()), Summand::character(s.chi_w)).blocks() == phi_C().blocks());

  const LParameter doubled = mk_parameter(
      {{Summand::character(chi(3)), 2}, {twist(atom("B", 2), chi(-1)), 1}}, {}, hermitian(4));
  CHECK(multiplicity_of(recover_phi2(doubled, s), Summand::character(s.doubling_character())) == 1);

  const LParameter absent = mk_parameter({{atom("D", 4, Duality::Minus), 1}}, {}, hermitian(4));
  try {
    recover_phi2(absent, s);
    FAIL("expected ChiWAbsent");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ChiWAbsent);
  }
}

TEST_CASE("zero case") {
  const LParameter absent = mk_parameter({{atom("D", 4, Duality::Minus), 1}}, {}, hermitian(4));
  const MultiplicityReport r = main_multiplicity(fixtures::phi1_AB(), absent, n3(), EpsilonOracle(HashedBackend{42}));
  CHECK(r.result == MultiplicityCase::Zero);
  CHECK_FALSE(r.pair);
  CHECK(seesaw_pairs(fixtures::phi1_AB(), absent, n3(), EpsilonOracle(HashedBackend{42})).pairs.empty());
}

TEST_CASE("constant backend gives the trivial pair") {
  const MultiplicityReport r = main_multiplicity(fixtures::phi1_AB(), phi_C(), n3(), EpsilonOracle());
  REQUIRE(r.pair);
  CHECK(r.result == MultiplicityCase::One);
  CHECK(r.pair->big.character == SChar::trivial(2));
  CHECK(r.pair->small.character == SChar::trivial(2));
  CHECK(r.pair->big.side == Sign::plus());
  CHECK(r.pair->small.side == Sign::plus());
}

TEST_CASE("closed form on a hand-evaluated table") {
  // With phi^v = C chi + chi^-3 and phi2 = C the needed root numbers are
  // A|chi^-5, B|chi^-5, A*C|chi^-1 and B*C|chi^-1 at psi2E.
  TableBackend table;
  table.set(AtomKey::from_parts({"A"}, chi(-5)), PsiTag::psi2E, Sign::minus());
  table.set(AtomKey::from_parts({"B"}, chi(-5)), PsiTag::psi2E, Sign::minus());
  table.set(AtomKey::from_parts({"A", "C"}, chi(-1)), PsiTag::psi2E, Sign::minus());
  table.set(AtomKey::from_parts({"B", "C"}, chi(-1)), PsiTag::psi2E, Sign::plus());
  const EpsilonOracle oracle(table);
  const GgpSetting s = n3();
  const MultiplicityReport r = main_multiplicity(fixtures::phi1_AB(), phi_C(), s, oracle);
  REQUIRE(r.pair);
  const LParameter& big = *r.theta_phi1;
  // diamond(A) = eps(A|chi^-5) eps(A*C|chi^-1) = +1, diamond(B) = -1.
  CHECK(value_at(r.pair->big.character, big, twist(atom("A", 1), chi(-2))) == Sign::plus());
  CHECK(value_at(r.pair->big.character, big, twist(atom("B", 2), chi(-2))) == Sign::minus());
  // heart(chi_w) = eps(A|chi^-5) eps(B|chi^-5) = +1, heart(C chi^-1) = eps(A*C) eps(B*C) = -1.
  CHECK(value_at(r.pair->small.character, phi_C(), Summand::character(chi(3))) == Sign::plus());
  CHECK(value_at(r.pair->small.character, phi_C(), twist(atom("C", 3), chi(-1))) == Sign::minus());
  CHECK(r.pair->big.side == Sign::minus());
  CHECK(r.pair->small.side == Sign::minus());

  const SeesawResult seesaw = seesaw_pairs(fixtures::phi1_AB(), phi_C(), s, oracle);
  REQUIRE(seesaw.pairs.size() == 1);
  CHECK(seesaw.pairs[0] == r.pair->characters());
}

TEST_CASE("central-value identity on the fixture") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const EpsilonOracle o(HashedBackend{seed});
    const MultiplicityReport r = main_multiplicity(fixtures::phi1_AB(), phi_C(), n3(), o);
    REQUIRE(r.pair);
    const Sign diamond = eval(r.pair->big.character, central_element(*r.theta_phi1));
    const Sign heart = eval(r.pair->small.character, central_element(phi_C()));
    CHECK(diamond == heart);
  }
}

TEST_CASE("hashed fixture agrees with the see-saw") {
  const EpsilonOracle o(HashedBackend{42});
  const MultiplicityReport r = main_multiplicity(fixtures::phi1_AB(), phi_C(), n3(), o);
  REQUIRE(r.pair);
  CHECK(r.method == "closed-form");
  const SeesawResult seesaw = seesaw_pairs(fixtures::phi1_AB(), phi_C(), n3(), o);
  REQUIRE(seesaw.pairs.size() == 1);
  CHECK(seesaw.pairs[0] == r.pair->characters());
  CHECK(seesaw.trace.final_pair == r.pair->characters());
}

TEST_CASE("doubled chi_w") {
  const GgpSetting s = n3();
  const LParameter phi = mk_parameter(
      {{Summand::character(chi(3)), 2}, {twist(atom("B", 2), chi(-1)), 1}}, {}, hermitian(4));
  const EpsilonOracle o(HashedBackend{42});
  const MultiplicityReport witness = main_multiplicity(fixtures::phi1_AB(), phi, s, o);
  CHECK(witness.result == MultiplicityCase::AtLeastOne);
  CHECK(witness.method == "see-saw");

  GgpOptions certified;
  certified.certify_irreducible_lift = true;
  const MultiplicityReport r = main_multiplicity(fixtures::phi1_AB(), phi, s, o, certified);
  CHECK(r.result == MultiplicityCase::One);
  CHECK(r.method == "irreducible-lift");
  REQUIRE(r.pair);
  // No c_1 coordinate: S_phi has one basis element per distinct summand of phi2.
  CHECK(r.pair->small.character.rank() == component_group(*r.recovered_phi2).rank());
  const SeesawResult seesaw = seesaw_pairs(fixtures::phi1_AB(), phi, s, o);
  REQUIRE(seesaw.pairs.size() == 1);
  CHECK(seesaw.pairs[0] == r.pair->characters());
}

TEST_CASE("hypotheses") {
  const LParameter plain = mk_parameter(fixtures::phi1_AB().blocks(), {}, skew_hermitian(3));
  try {
    main_multiplicity(plain, phi_C(), n3(), EpsilonOracle());
    FAIL("expected a hypothesis violation");
  } catch (const Error& e) {
    CHECK(e.is_hypothesis_violation());
  }
  try {
    main_multiplicity(fixtures::phi1_AB(), phi_C(), identified_setting(2, chi()), EpsilonOracle());
    FAIL("expected a hypothesis violation");
  } catch (const Error& e) {
    CHECK(e.is_hypothesis_violation());
  }
}
