#include "doctest.h"

#include <random>

#include "ggp/epsilon.hpp"
#include "ggp/error.hpp"
#include "helpers.hpp"

using namespace ggp;
using fixtures::atom;
using fixtures::chi;

TEST_CASE("psi tags round trip") {
  for (PsiTag t : {PsiTag::psiE, PsiTag::psi2E, PsiTag::psiNeg2E}) CHECK(parse_psi_tag(to_string(t)) == t);
  CHECK_FALSE(parse_psi_tag("psi3E"));
}

TEST_CASE("atom keys fold twists and ignore order") {
  const Summand a = twist(atom("A", 1), chi(2));
  const Summand b = twist(atom("B", 2), chi(-1));
  CHECK(AtomKey::of({a, b}) == AtomKey::of({b, a}));
  CHECK(AtomKey::of({a, b}) == AtomKey::of({atom("A", 1), twist(atom("B", 2), chi())}));
  CHECK(AtomKey::of({a, b}).to_string() == "A*B|chi");
  CHECK(AtomKey::of({Summand::character(chi(3))}).to_string() == "|chi^3");
  CHECK(AtomKey::of({atom("A", 1), Summand::character(chi())}) == AtomKey::of({twist(atom("A", 1), chi())}));
}

TEST_CASE("constant backend") {
  const EpsilonOracle one;
  CHECK(one.eps_half({TensorFactor::of(fixtures::phi1_AB()), TensorFactor::of(chi())}, PsiTag::psi2E) == Sign::plus());
}

TEST_CASE("table backend is multiplicative in direct sums") {
  TableBackend table;
  table.set(AtomKey::of({atom("A", 1), atom("B", 1)}), PsiTag::psiE, Sign::minus());
  table.set(AtomKey::of({atom("A", 1), atom("C", 1)}), PsiTag::psiE, Sign::plus());
  const EpsilonOracle oracle(table);
  TensorFactor bc{{{atom("B", 1), 1}, {atom("C", 1), 1}}};
  CHECK(oracle.eps_half({TensorFactor::of(atom("A", 1)), bc}, PsiTag::psiE) == Sign::minus());
  // Even multiplicity cancels.
  CHECK(oracle.eps_half({TensorFactor::of(atom("A", 1)), TensorFactor::of(atom("B", 1), 2)}, PsiTag::psiE) ==
        Sign::plus());
  // Keys are symmetric.
  CHECK(oracle.eps_half({TensorFactor::of(atom("B", 1)), TensorFactor::of(atom("A", 1))}, PsiTag::psiE) ==
        Sign::minus());
  try {
    oracle.atom(AtomKey::of({atom("A", 1), atom("B", 1)}), PsiTag::psi2E);
    FAIL("expected MissingTableEntry");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::MissingTableEntry);
  }
  CHECK(oracle.audit().size() == 3);
  oracle.clear_audit();
  CHECK(oracle.audit().empty());
}

TEST_CASE("even multiplicity gives +1 for every backend") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const EpsilonOracle oracle(HashedBackend{seed});
    CHECK(oracle.eps_half({TensorFactor::of(atom("A", 1)), TensorFactor::of(atom("B", 3), 2)}, PsiTag::psiNeg2E) ==
          Sign::plus());
  }
}

TEST_CASE("hashed backend is deterministic and not constant") {
  const AtomKey key = AtomKey::of({atom("A", 1), twist(atom("C", 3), chi(-1))});
  const EpsilonOracle x(HashedBackend{42});
  const EpsilonOracle y(HashedBackend{42});
  CHECK(x.atom(key, PsiTag::psi2E) == y.atom(key, PsiTag::psi2E));
  CHECK(hashed_sign(42, "A*C|chi^-1;psi2E") == hashed_sign(42, "A*C|chi^-1;psi2E"));
  int minus = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) minus += hashed_sign(seed, "A|1;psiE").is_minus();
  CHECK(minus > 60);
  CHECK(minus < 140);
}

TEST_CASE("biadditivity on random sums") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const EpsilonOracle oracle(HashedBackend{rng()});
    auto random_sum = [&] {
      TensorFactor f;
      const int terms = 1 + static_cast<int>(rng() % 3);
      for (int i = 0; i < terms; ++i) {
        const std::string label(1, static_cast<char>('A' + rng() % 5));
        f.terms.push_back({twist(atom(label, 1), chi(static_cast<int>(rng() % 5) - 2)), 1 + static_cast<int>(rng() % 2)});
      }
      return f;
    };
    const TensorFactor x = random_sum();
    const TensorFactor y = random_sum();
    const TensorFactor rho = random_sum();
    TensorFactor xy = x;
    xy.terms.insert(xy.terms.end(), y.terms.begin(), y.terms.end());
    const PsiTag psi = PsiTag::psi2E;
    CHECK(oracle.eps_half({xy, rho}, psi) == oracle.eps_half({x, rho}, psi) * oracle.eps_half({y, rho}, psi));
    CHECK(oracle.eps_half({rho, xy}, psi) == oracle.eps_half({rho, x}, psi) * oracle.eps_half({rho, y}, psi));
  }
}

TEST_CASE("dual-pair blocks do not contribute") {
  const Summand x = twist(Summand::character(chi(3)), CharE::abs_power(1));
  const LParameter with_pair = mk_parameter({{twist(atom("A", 1), chi(-2)), 1}, {twist(atom("B", 2), chi(-2)), 1}},
                                            {{x, 1}}, hermitian(5));
  CHECK(TensorFactor::of(with_pair).terms.size() == 2);
}
