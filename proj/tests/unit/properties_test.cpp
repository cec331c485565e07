#include "doctest.h"

#include "ggp/properties.hpp"

using namespace ggp;

TEST_CASE("backend names") {
  for (BackendKind k : {BackendKind::One, BackendKind::Hashed, BackendKind::Table}) CHECK(parse_backend(to_string(k)) == k);
  CHECK_FALSE(parse_backend("random"));
}

TEST_CASE("empty config gives an empty report") {
  const PropertyReport r = run_property_suite(SuiteConfig{});
  CHECK(r.checks.empty());
  CHECK(r.all_passed());
}

TEST_CASE("constant backend passes everything") {
  SuiteConfig config;
  config.seeds = 30;
  config.parities = {0, 1};
  config.backends = {BackendKind::One};
  const PropertyReport r = run_property_suite(config);
  CHECK(r.checks.size() > 0);
  CHECK(r.failed() == 0);
}

TEST_CASE("odd parity passes with the hashed backend") {
  SuiteConfig config;
  config.seeds = 60;
  config.max_rank = 5;
  config.parities = {1};
  config.backends = {BackendKind::Hashed};
  const PropertyReport r = run_property_suite(config);
  for (const auto& c : r.checks) CHECK_MESSAGE(c.passed, c.property << " seed " << c.seed << ": " << c.detail);
}

TEST_CASE("random instances are reproducible") {
  for (std::uint64_t seed = 1; seed < 30; ++seed) {
    const GgpInstance a = random_instance(seed, 3, false);
    const GgpInstance b = random_instance(seed, 3, false);
    CHECK(a.phi1 == b.phi1);
    CHECK(a.phi == b.phi);
    CHECK(a.contains_chi_w == b.contains_chi_w);
    CHECK(a.phi1.supercuspidal_packet());
    CHECK(a.phi.tempered());
    CHECK(a.phi.rank() == 4);
  }
}

TEST_CASE("doubling instances contain chi_w twice") {
  for (std::uint64_t seed = 1; seed < 20; ++seed) {
    for (int n : {2, 3, 4}) {
      const GgpInstance inst = random_instance(seed, n, seed % 2 == 0, true, true);
      CHECK(multiplicity_of(inst.phi, Summand::character(inst.setting.chi_w)) == 2);
    }
  }
}
