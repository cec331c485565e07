#include "ggp/properties.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "ggp/component_group.hpp"
#include "ggp/error.hpp"
#include "ggp/theta.hpp"

namespace ggp {

int InstanceGenerator::uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

bool InstanceGenerator::coin(double p) { return std::bernoulli_distribution(p)(rng_); }

Summand InstanceGenerator::same_type_atom(Sign sign, int max_dim) {
  const int k = next_label_++;
  if (coin(0.3)) return Summand::character(CharE::generator("x" + std::to_string(k), grade_of(sign)));
  const int dim = uniform(1, std::min(3, max_dim));
  if (coin(0.25)) {
    // Opposite sign, corrected by a twist restricting to omega.
    const Summand base = Summand::atom("A" + std::to_string(k), dim, duality_of(-sign));
    return twist(base, CharE::generator("u", Grade::Omega));
  }
  return Summand::atom("A" + std::to_string(k), dim, duality_of(sign));
}

Summand InstanceGenerator::foreign_atom(Sign sign, int max_dim) {
  const int k = next_label_++;
  const int dim = uniform(1, std::min(3, max_dim));
  if (coin()) return Summand::atom("N" + std::to_string(k), dim, Duality::None);
  return Summand::atom("A" + std::to_string(k), dim, duality_of(-sign));
}

LParameter InstanceGenerator::supercuspidal(UnitaryGroup group) {
  std::vector<Block> blocks;
  int remaining = group.rank;
  while (remaining > 0) {
    Summand s = same_type_atom(group.required_sign(), remaining);
    remaining -= s.dim();
    blocks.push_back({std::move(s), 1});
  }
  ParameterFlags flags;
  flags.supercuspidal_packet = true;
  return LParameter::make(std::move(blocks), {}, group, flags);
}

LParameter InstanceGenerator::tempered(UnitaryGroup group) {
  const LParameter p = tempered_blocks(group, group.rank);
  return LParameter::make(p.blocks(), p.dual_pairs(), group);
}

LParameter InstanceGenerator::tempered_blocks(UnitaryGroup group, int dim) {
  std::vector<Block> blocks;
  std::vector<DualPairBlock> pairs;
  int remaining = dim;
  while (remaining > 0) {
    if (remaining >= 2 && coin(0.2)) {
      Summand s = foreign_atom(group.required_sign(), remaining / 2);
      remaining -= 2 * s.dim();
      pairs.push_back({std::move(s), 1});
      continue;
    }
    Summand s = same_type_atom(group.required_sign(), remaining);
    const int m = (2 * s.dim() <= remaining && coin(0.25)) ? 2 : 1;
    remaining -= m * s.dim();
    blocks.push_back({std::move(s), m});
  }
  return LParameter::unchecked(std::move(blocks), std::move(pairs), {group.form, dim});
}

GgpInstance random_instance(std::uint64_t seed, int n, bool identify_chi, std::optional<bool> contains,
                            bool doubling) {
  InstanceGenerator gen(seed);
  const CharE chi = CharE::generator("chi", Grade::Omega);
  BaseFieldData base{gen.coin() ? Sign::plus() : Sign::minus()};
  GgpSetting setting = identify_chi ? identified_setting(n, chi, base)
                                    : GgpSetting{n, chi, CharE::generator("chiV", grade_of_power(n)),
                                                 CharE::generator("chiW", grade_of_power(n)), base};
  setting.validate();
  LParameter phi1 = gen.supercuspidal(skew_hermitian(n));
  const bool with_chi_w = contains.value_or(gen.coin());
  if (!with_chi_w) {
    LParameter phi = gen.tempered(hermitian(n + 1));
    return GgpInstance{seed, setting, std::move(phi1), std::nullopt, std::move(phi), false};
  }
  LParameter phi2 = [&] {
    if (!doubling) return gen.tempered(skew_hermitian(n));
    const Summand extra = Summand::character(setting.doubling_character());
    const LParameter joined = add_summand(gen.tempered_blocks(skew_hermitian(n), n - 1), extra);
    return LParameter::make(joined.blocks(), joined.dual_pairs(), skew_hermitian(n));
  }();
  const LParameter joined =
      add_summand(tensor_twist(phi2, setting.recover_twist()), Summand::character(setting.chi_w));
  LParameter phi = LParameter::make(joined.blocks(), joined.dual_pairs(), hermitian(n + 1));
  return GgpInstance{seed, setting, std::move(phi1), std::move(phi2), std::move(phi), true};
}

std::string_view to_string(BackendKind kind) {
  switch (kind) {
    case BackendKind::One: return "one";
    case BackendKind::Hashed: return "hashed";
    case BackendKind::Table: return "table";
  }
  return "one";
}

std::optional<BackendKind> parse_backend(std::string_view text) {
  if (text == "one") return BackendKind::One;
  if (text == "hashed") return BackendKind::Hashed;
  if (text == "table") return BackendKind::Table;
  return std::nullopt;
}

std::size_t PropertyReport::passed() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const auto& c) { return c.passed; }));
}

std::size_t PropertyReport::failed() const { return checks.size() - passed(); }

EpsilonOracle make_oracle(BackendKind kind, std::uint64_t seed, const std::optional<TableBackend>& table) {
  switch (kind) {
    case BackendKind::One: return EpsilonOracle(ConstantOneBackend{});
    case BackendKind::Hashed: return EpsilonOracle(HashedBackend{seed});
    case BackendKind::Table: return EpsilonOracle(table.value_or(TableBackend{}));
  }
  return EpsilonOracle();
}

namespace {

std::uint64_t instance_seed(std::uint64_t base, int index, int parity) {
  return base + 1000003ULL * static_cast<std::uint64_t>(index) + 7919ULL * static_cast<std::uint64_t>(parity);
}

class Recorder {
 public:
  Recorder(PropertyReport& report, std::uint64_t seed, int n, std::string backend)
      : report_(report), seed_(seed), n_(n), backend_(std::move(backend)) {}

  // Runs one property; exceptions count as failures.
  void check(const std::string& name, const std::function<std::string()>& body) {
    PropertyCheck c{name, seed_, n_, backend_, true, ""};
    try {
      c.detail = body();
      c.passed = c.detail.empty();
    } catch (const std::exception& e) {
      c.passed = false;
      c.detail = e.what();
    }
    report_.checks.push_back(std::move(c));
  }

 private:
  PropertyReport& report_;
  std::uint64_t seed_;
  int n_;
  std::string backend_;
};

std::string check_theta_shape(const GgpInstance& inst, const EpsilonOracle&) {
  const LParameter up2 = theta_up2_param(inst.phi1, inst.setting.leg1());
  up2.validate();
  if (up2.rank() != inst.phi1.rank() + 2) return "rank-two lift has the wrong dimension";
  if (component_group(up2).rank() != component_group(inst.phi1).rank()) return "rank-two lift changed S";
  if (up2.tempered()) return "rank-two lift should not be tempered";
  const LParameter& source = inst.phi2 ? *inst.phi2 : inst.phi1;
  const ThetaContext ctx = inst.setting.leg2();
  const LParameter up1 = theta_up1_param(source, ctx);
  up1.validate();
  if (up1.rank() != source.rank() + 1) return "rank-one lift has the wrong dimension";
  const std::size_t expected = component_group(source).rank() + (theta_up1_contains_chi_v(source, ctx) ? 0 : 1);
  if (component_group(up1).rank() != expected) return "rank-one lift has the wrong component group";
  return "";
}

std::string check_up1_roundtrip(const GgpInstance& inst, const EpsilonOracle&) {
  const LParameter& source = inst.phi2 ? *inst.phi2 : inst.phi1;
  const ThetaContext ctx = inst.setting.leg2();
  const Embedding emb = theta_embedding(source, ctx);
  const bool identified = theta_up1_contains_chi_v(source, ctx);
  for (const SChar& eta : enumerate_characters(component_group(source))) {
    for (Sign eps : {Sign::plus(), Sign::minus()}) {
      const ThetaCharResult up = theta_up1_char(source, eta, eps, ctx);
      if (restrict(up.eta, emb) != eta) return "restriction of the lift of " + eta.to_string() + " differs";
      if (!identified && up.side != eps) return "requested side not honoured";
      if (packet_side(up.eta, theta_up1_param(source, ctx)) != up.side) return "reported side is wrong";
    }
  }
  return "";
}

std::string check_up2_bijection(const GgpInstance& inst, const EpsilonOracle& oracle) {
  std::set<SChar> images;
  const auto all = enumerate_characters(component_group(inst.phi1));
  for (const SChar& eta : all) images.insert(theta_up2_char(eta, inst.phi1, inst.setting.leg1(), oracle));
  return images.size() == all.size() ? "" : "rank-two lift is not injective on characters";
}

std::string check_biadditivity(const GgpInstance& inst, const EpsilonOracle& oracle) {
  for (PsiTag psi : {PsiTag::psiE, PsiTag::psi2E, PsiTag::psiNeg2E}) {
    const Sign whole = oracle.eps_half({TensorFactor::of(inst.phi1), TensorFactor::of(inst.phi)}, psi);
    Sign left = Sign::plus();
    for (const auto& b : inst.phi1.blocks()) {
      for (int k = 0; k < b.multiplicity; ++k) {
        left *= oracle.eps_half({TensorFactor::of(b.summand), TensorFactor::of(inst.phi)}, psi);
      }
    }
    Sign right = Sign::plus();
    for (const auto& b : inst.phi.blocks()) {
      for (int k = 0; k < b.multiplicity; ++k) {
        right *= oracle.eps_half({TensorFactor::of(inst.phi1), TensorFactor::of(b.summand)}, psi);
      }
    }
    if (whole != left || whole != right) return "not multiplicative in direct sums for " + std::string(to_string(psi));
  }
  return "";
}

std::string check_nu(const GgpInstance& inst, const EpsilonOracle&) {
  for (const SChar& eta : enumerate_characters(component_group(inst.phi))) {
    const SChar twice = nu_twist(nu_twist(eta, inst.phi, inst.setting.base), inst.phi, inst.setting.base);
    if (twice != eta) return "nu twist is not an involution";
    const SChar back = dual_character(dual_character(eta, inst.phi, inst.setting.base), contragredient(inst.phi),
                                      inst.setting.base);
    if (back != eta) return "dual character is not an involution";
  }
  return "";
}

CharPair formula_pair(const GgpInstance& inst, const EpsilonOracle& oracle) {
  const int m = multiplicity_of(inst.phi, Summand::character(inst.setting.chi_w));
  return m == 1 ? closed_form_pair(inst.phi1, inst.phi, inst.setting, oracle)
                : irreducible_lift_pair(inst.phi1, inst.phi, inst.setting, oracle);
}

std::string check_central_value(const GgpInstance& inst, const EpsilonOracle& oracle) {
  const CharPair p = formula_pair(inst, oracle);
  const LParameter lifted = theta_up2_param(inst.phi1, inst.setting.leg1());
  const Sign a = packet_side(p.diamond, lifted);
  const Sign b = packet_side(p.heart, inst.phi);
  return a == b ? "" : "sides " + a.to_string() + " and " + b.to_string() + " differ";
}

}  // namespace

PropertyReport run_property_suite(const SuiteConfig& config) {
  PropertyReport report;
  for (int index = 0; index < config.seeds; ++index) {
    for (int parity : config.parities) {
      std::vector<int> ns;
      for (int n = 1; n <= config.max_rank; ++n) {
        if (n % 2 == parity) ns.push_back(n);
      }
      if (ns.empty()) continue;
      const std::uint64_t seed = instance_seed(config.base_seed, index, parity);
      std::mt19937_64 pick(seed);
      const int n = ns[std::uniform_int_distribution<std::size_t>(0, ns.size() - 1)(pick)];
      const bool contains = std::bernoulli_distribution(0.5)(pick);
      const bool doubling = contains && std::bernoulli_distribution(0.25)(pick);
      const GgpInstance inst = random_instance(seed, n, config.identify_chi, contains, doubling);

      for (BackendKind kind : config.backends) {
        const EpsilonOracle oracle = make_oracle(kind, seed, config.table);
        Recorder rec(report, seed, n, std::string(to_string(kind)));
        auto run = [&](const std::string& name, std::string (*fn)(const GgpInstance&, const EpsilonOracle&)) {
          rec.check(name, [&] { return fn(inst, oracle); });
        };
        run("theta.shape", check_theta_shape);
        run("theta.restriction_round_trip", check_up1_roundtrip);
        run("theta.rank_two_bijection", check_up2_bijection);
        run("epsilon.biadditivity", check_biadditivity);
        run("component_group.nu_involution", check_nu);

        std::optional<SeesawResult> seesaw;
        rec.check("seesaw.zero_dichotomy", [&]() -> std::string {
          seesaw = seesaw_pairs(inst.phi1, inst.phi, inst.setting, oracle, config.mutation);
          const bool empty = seesaw->pairs.empty();
          if (empty == inst.contains_chi_w) {
            return inst.contains_chi_w ? "no pair although phi contains chi_W" : "pair found although chi_W is absent";
          }
          return "";
        });
        rec.check("seesaw.replay", [&]() -> std::string {
          if (!seesaw) return "no see-saw result to replay";
          return replay(*seesaw, inst.phi1, inst.phi, inst.setting, oracle, config.mutation) ? "" : "replay differs";
        });
        rec.check("ggp.trichotomy", [&]() -> std::string {
          const MultiplicityReport r = main_multiplicity(inst.phi1, inst.phi, inst.setting, oracle);
          const int m = multiplicity_of(inst.phi, Summand::character(inst.setting.chi_w));
          const MultiplicityCase want =
              m == 0 ? MultiplicityCase::Zero : (m == 1 ? MultiplicityCase::One : MultiplicityCase::AtLeastOne);
          return r.result == want ? "" : "case " + std::string(to_string(r.result)) + " for multiplicity " + std::to_string(m);
        });
        if (!inst.contains_chi_w) continue;

        run("recipe.central_value", check_central_value);
        const bool single = multiplicity_of(inst.phi, Summand::character(inst.setting.chi_w)) == 1;
        rec.check(single ? "seesaw.closed_form_agreement" : "seesaw.irreducible_lift_agreement",
                  [&]() -> std::string {
                    if (!seesaw) return "see-saw failed";
                    const CharPair expected = formula_pair(inst, oracle);
                    if (seesaw->pairs.size() != 1) {
                      return "see-saw gives " + std::to_string(seesaw->pairs.size()) + " pairs, formula gives " +
                             expected.to_string();
                    }
                    if (seesaw->pairs.front() != expected) {
                      return "see-saw " + seesaw->pairs.front().to_string() + " vs formula " + expected.to_string();
                    }
                    return "";
                  });
      }
    }
  }
  return report;
}

}  // namespace ggp
