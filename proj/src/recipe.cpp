#include "ggp/recipe.hpp"

#include "ggp/error.hpp"
#include "ggp/seesaw.hpp"

namespace ggp {

namespace {

void require_unitary_grade(const CharE& c, Grade g, const char* name) {
  if (!c.unitary()) throw Error(ErrorKind::InvalidContext, std::string(name) + " must be unitary");
  if (c.restriction_grade() != g) {
    throw Error(ErrorKind::InvalidContext, std::string(name) + " = " + c.to_string() + " restricts to the wrong character of F^x");
  }
}

CharE chi_power_alternating(const CharE& chi, int k) { return k % 2 == 0 ? chi : chi.inverse(); }

}  // namespace

void GgpSetting::validate() const {
  if (n < 1) throw Error(ErrorKind::InvalidContext, "n must be at least 1");
  require_unitary_grade(chi, Grade::Omega, "chi");
  require_unitary_grade(chi_v, grade_of_power(n), "chi_V");
  require_unitary_grade(chi_w, grade_of_power(n), "chi_W");
}

ThetaContext GgpSetting::leg1() const { return make_context(chi_v, chi_w, 2, n); }

ThetaContext GgpSetting::leg2() const { return make_context(chi_v * chi_power_alternating(chi, n), chi_w, 1, n); }

ThetaContext GgpSetting::leg1_inverted() const { return make_context(chi_v.inverse(), chi_w.inverse(), 2, n); }

ThetaContext GgpSetting::leg2_inverted() const {
  return make_context(chi_v.inverse() * chi_power_alternating(chi, n), chi_w.inverse(), 1, n);
}

CharE GgpSetting::leg3_character() const { return chi_power_alternating(chi, n + 1); }

CharE GgpSetting::recover_twist() const { return chi_v.inverse() * chi * chi_w; }

CharE GgpSetting::doubling_character() const { return chi_v * chi.inverse(); }

GgpSetting identified_setting(int n, CharE chi, BaseFieldData base) {
  GgpSetting s{n, chi, chi.pow(n + 2), chi.pow(n), base};
  s.validate();
  return s;
}

CharPair bessel_eta(const LParameter& d, const LParameter& h, const EpsilonOracle& oracle) {
  CharPair out;
  for (const auto& b : d.blocks()) {
    out.diamond.values.push_back(oracle.eps_half({TensorFactor::of(b.summand), TensorFactor::of(h)}, PsiTag::psiNeg2E));
  }
  for (const auto& b : h.blocks()) {
    out.heart.values.push_back(oracle.eps_half({TensorFactor::of(d), TensorFactor::of(b.summand)}, PsiTag::psiNeg2E));
  }
  return out;
}

CharPair fj_eta(const LParameter& d, const LParameter& h, int n, const CharE& chi, const EpsilonOracle& oracle) {
  const PsiTag tag = n % 2 != 0 ? PsiTag::psi2E : PsiTag::psiE;
  const TensorFactor twist = TensorFactor::of(chi.inverse());
  CharPair out;
  for (const auto& b : d.blocks()) {
    out.diamond.values.push_back(oracle.eps_half({TensorFactor::of(b.summand), TensorFactor::of(h), twist}, tag));
  }
  for (const auto& b : h.blocks()) {
    out.heart.values.push_back(oracle.eps_half({TensorFactor::of(d), TensorFactor::of(b.summand), twist}, tag));
  }
  return out;
}

LParameter recover_phi2(const LParameter& phi, const GgpSetting& setting) {
  const Summand chi_w = Summand::character(setting.chi_w);
  if (multiplicity_of(phi, chi_w) == 0) {
    throw Error(ErrorKind::ChiWAbsent, phi.to_string() + " does not contain " + setting.chi_w.to_string());
  }
  const LParameter rest = tensor_twist(remove_once(phi, chi_w), setting.recover_twist().inverse());
  return LParameter::make(rest.blocks(), rest.dual_pairs(), skew_hermitian(setting.n));
}

PacketMember PacketMember::of(LParameter parameter, SChar character) {
  const Sign side = packet_side(character, parameter);
  return PacketMember{std::move(parameter), std::move(character), side};
}

namespace {

// eta(a_i) = eps(phi1_i chi_v^-1 chi_w (x) phi^v) on the basis of S_{theta(phi1)}.
SChar big_character(const LParameter& phi1, const LParameter& phi, const GgpSetting& setting,
                    const EpsilonOracle& oracle) {
  const LParameter lifted = theta_up2_param(phi1, setting.leg1());
  const TensorFactor phi_dual = TensorFactor::of(contragredient(phi));
  SChar out;
  for (const auto& b : lifted.blocks()) {
    out.values.push_back(oracle.eps_half({TensorFactor::of(b.summand), phi_dual}, setting.fj_tag()));
  }
  return out;
}

Sign small_value(const LParameter& phi1, const Summand& phi2_summand, const GgpSetting& setting,
                 const EpsilonOracle& oracle) {
  return oracle.eps_half(
      {TensorFactor::of(phi1), TensorFactor::of(dual(phi2_summand)), TensorFactor::of(setting.chi.inverse())},
      setting.fj_tag());
}

}  // namespace

CharPair closed_form_pair(const LParameter& phi1, const LParameter& phi, const GgpSetting& setting,
                          const EpsilonOracle& oracle) {
  const Summand chi_w = Summand::character(setting.chi_w);
  if (multiplicity_of(phi, chi_w) != 1) {
    throw Error(ErrorKind::HypothesisViolation, "the closed form needs chi_W to occur exactly once");
  }
  const LParameter phi2 = recover_phi2(phi, setting);
  const CharE untwist = setting.recover_twist().inverse();
  CharPair out;
  out.diamond = big_character(phi1, phi, setting, oracle);
  for (const auto& b : phi.blocks()) {
    if (b.summand == chi_w) {
      const Sign first = oracle.eps_half({TensorFactor::of(phi1), TensorFactor::of(setting.leg1().lift_twist()),
                                          TensorFactor::of(contragredient(phi))},
                                         setting.fj_tag());
      const Sign second = oracle.eps_half({TensorFactor::of(phi1), TensorFactor::of(contragredient(phi2)),
                                           TensorFactor::of(setting.chi.inverse())},
                                          setting.fj_tag());
      out.heart.values.push_back(first * second);
    } else {
      out.heart.values.push_back(small_value(phi1, twist(b.summand, untwist), setting, oracle));
    }
  }
  return out;
}

CharPair irreducible_lift_pair(const LParameter& phi1, const LParameter& phi, const GgpSetting& setting,
                               const EpsilonOracle& oracle) {
  const LParameter phi2 = recover_phi2(phi, setting);
  if (multiplicity_of(phi2, Summand::character(setting.doubling_character())) == 0) {
    throw Error(ErrorKind::HypothesisViolation,
                "phi2 must contain " + setting.doubling_character().to_string() + " for this formula");
  }
  SChar on_phi2;
  for (const auto& b : phi2.blocks()) on_phi2.values.push_back(small_value(phi1, b.summand, setting, oracle));
  const Embedding emb = twist_embedding(phi2, phi, setting.recover_twist());
  if (emb.target_rank != emb.image.size()) throw Error(ErrorKind::EngineInvariant, "S_phi2 and S_phi differ");
  CharPair out;
  out.diamond = big_character(phi1, phi, setting, oracle);
  out.heart = SChar::trivial(emb.target_rank);
  for (std::size_t j = 0; j < emb.image.size(); ++j) out.heart.values[emb.image[j]] = on_phi2.values[j];
  return out;
}

std::string_view to_string(MultiplicityCase c) {
  switch (c) {
    case MultiplicityCase::Zero: return "Zero";
    case MultiplicityCase::One: return "One";
    case MultiplicityCase::AtLeastOne: return "AtLeastOne";
  }
  return "Zero";
}

void check_hypotheses(const LParameter& phi1, const LParameter& phi, const GgpSetting& setting) {
  setting.validate();
  if (phi1.group() != skew_hermitian(setting.n)) {
    throw Error(ErrorKind::HypothesisViolation,
                "phi1 must be a parameter of " + skew_hermitian(setting.n).to_string() + ", got " +
                    phi1.group().to_string());
  }
  if (!phi1.supercuspidal_packet()) {
    throw Error(ErrorKind::NotSupercuspidalPacket, "phi1 must have a packet of supercuspidal representations");
  }
  if (phi.group() != hermitian(setting.n + 1)) {
    throw Error(ErrorKind::HypothesisViolation,
                "phi must be a parameter of " + hermitian(setting.n + 1).to_string() + ", got " +
                    phi.group().to_string());
  }
  if (!phi.tempered()) throw Error(ErrorKind::HypothesisViolation, "phi must be tempered");
  phi1.validate();
  phi.validate();
}

MultiplicityReport main_multiplicity(const LParameter& phi1, const LParameter& phi, const GgpSetting& setting,
                                     const EpsilonOracle& oracle, const GgpOptions& options) {
  check_hypotheses(phi1, phi, setting);
  const std::size_t audit_start = oracle.audit().size();
  MultiplicityReport report;
  report.theta_phi1 = theta_up2_param(phi1, setting.leg1());
  report.chi_w_multiplicity = multiplicity_of(phi, Summand::character(setting.chi_w));

  auto finish = [&](const CharPair& chars) {
    report.pair = DistinguishedPair{PacketMember::of(*report.theta_phi1, chars.diamond),
                                    PacketMember::of(phi, chars.heart)};
  };

  if (report.chi_w_multiplicity == 0) {
    report.result = MultiplicityCase::Zero;
  } else {
    report.recovered_phi2 = recover_phi2(phi, setting);
    if (report.chi_w_multiplicity == 1) {
      report.result = MultiplicityCase::One;
      report.method = "closed-form";
      finish(closed_form_pair(phi1, phi, setting, oracle));
    } else if (options.certify_irreducible_lift) {
      report.result = MultiplicityCase::One;
      report.method = "irreducible-lift";
      finish(irreducible_lift_pair(phi1, phi, setting, oracle));
    } else {
      report.result = MultiplicityCase::AtLeastOne;
      report.method = "see-saw";
      const SeesawResult witness = seesaw_pairs(phi1, phi, setting, oracle);
      if (witness.trace.final_pair) {
        finish(*witness.trace.final_pair);
      } else if (!witness.pairs.empty()) {
        finish(witness.pairs.front());
      }
    }
  }
  const auto& calls = oracle.audit();
  report.audit.assign(calls.begin() + static_cast<std::ptrdiff_t>(audit_start), calls.end());
  return report;
}

}  // namespace ggp
