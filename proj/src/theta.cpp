#include "ggp/theta.hpp"

#include "ggp/error.hpp"

namespace ggp {

namespace {

FormKind other_form(FormKind f) {
  return f == FormKind::Hermitian ? FormKind::SkewHermitian : FormKind::Hermitian;
}

void require_source(const LParameter& phi, const ThetaContext& ctx) {
  ctx.validate();
  if (phi.rank() != ctx.source_rank) {
    throw Error(ErrorKind::RankMismatch, "lift context expects rank " + std::to_string(ctx.source_rank) +
                                             ", parameter has rank " + std::to_string(phi.rank()));
  }
}

}  // namespace

void ThetaContext::validate() const {
  if (rank_delta != 1 && rank_delta != 2) {
    throw Error(ErrorKind::InvalidContext, "rank difference must be 1 or 2");
  }
  if (source_rank < 1) throw Error(ErrorKind::InvalidContext, "source rank must be positive");
  if (!chi_v.unitary() || !chi_w.unitary()) {
    throw Error(ErrorKind::InvalidContext, "splitting characters must be unitary");
  }
  if (chi_w.restriction_grade() != grade_of_power(source_rank)) {
    throw Error(ErrorKind::InvalidContext,
                chi_w.to_string() + " must restrict to omega^" + std::to_string(source_rank));
  }
  if (chi_v.restriction_grade() != grade_of_power(source_rank + rank_delta)) {
    throw Error(ErrorKind::InvalidContext,
                chi_v.to_string() + " must restrict to omega^" + std::to_string(source_rank + rank_delta));
  }
}

ThetaContext make_context(CharE chi_v, CharE chi_w, int rank_delta, int source_rank) {
  ThetaContext ctx{std::move(chi_v), std::move(chi_w), rank_delta, source_rank};
  ctx.validate();
  return ctx;
}

bool theta_up1_contains_chi_v(const LParameter& phi, const ThetaContext& ctx) {
  return multiplicity_of(phi, Summand::character(ctx.chi_v)) > 0;
}

LParameter theta_up1_param(const LParameter& phi, const ThetaContext& ctx) {
  require_source(phi, ctx);
  if (ctx.rank_delta != 1) throw Error(ErrorKind::InvalidContext, "not a rank-one lift context");
  LParameter twisted = tensor_twist(phi, ctx.lift_twist());
  LParameter out = add_summand(twisted, Summand::character(ctx.chi_w));
  out = out.with_group({other_form(phi.group().form), ctx.target_rank()});
  out.validate();
  return out;
}

Embedding theta_embedding(const LParameter& phi, const ThetaContext& ctx) {
  const LParameter target =
      ctx.rank_delta == 1 ? theta_up1_param(phi, ctx) : theta_up2_param(phi.with_supercuspidal_packet(true), ctx);
  return twist_embedding(phi, target, ctx.lift_twist());
}

ThetaCharResult theta_up1_char(const LParameter& phi, const SChar& eta, Sign target_side,
                               const ThetaContext& ctx) {
  const LParameter target = theta_up1_param(phi, ctx);
  const Embedding emb = twist_embedding(phi, target, ctx.lift_twist());
  if (eta.rank() != emb.image.size()) {
    throw Error(ErrorKind::RankMismatch, "character does not live on the component group of " + phi.to_string());
  }
  SChar up = SChar::trivial(emb.target_rank);
  for (std::size_t i = 0; i < emb.image.size(); ++i) up.values[emb.image[i]] = eta.values[i];

  if (theta_up1_contains_chi_v(phi, ctx)) {
    if (emb.target_rank != emb.image.size()) throw Error(ErrorKind::EngineInvariant, "identification failed");
    return {up, packet_side(up, target)};
  }
  const auto b1 = component_group(target).index_of(Summand::character(ctx.chi_w));
  if (!b1 || emb.target_rank != emb.image.size() + 1) {
    throw Error(ErrorKind::EngineInvariant, "new basis element missing after the lift");
  }
  // chi_w occurs once, so its coordinate in z is set: solve for its value.
  up.values[*b1] = target_side * packet_side(eta, phi);
  return {up, target_side};
}

LParameter theta_up2_param(const LParameter& phi1, const ThetaContext& ctx) {
  require_source(phi1, ctx);
  if (ctx.rank_delta != 2) throw Error(ErrorKind::InvalidContext, "not a rank-two lift context");
  if (!phi1.supercuspidal_packet()) {
    throw Error(ErrorKind::NotSupercuspidalPacket,
                "the rank-two lift needs a packet of supercuspidal representations: " + phi1.to_string());
  }
  LParameter twisted = tensor_twist(phi1, ctx.lift_twist());
  std::vector<DualPairBlock> pairs = twisted.dual_pairs();
  pairs.push_back({Summand::character(ctx.chi_w * CharE::abs_power(1)), 1});
  LParameter out = LParameter::unchecked(twisted.blocks(), std::move(pairs),
                                         {other_form(phi1.group().form), ctx.target_rank()});
  out.validate();
  return out;
}

Sign theta_up2_eps_prime(Sign eps, const LParameter& phi1, const ThetaContext& ctx,
                         const EpsilonOracle& oracle) {
  return eps * oracle.eps_half({TensorFactor::of(phi1), TensorFactor::of(ctx.chi_v.inverse())}, PsiTag::psi2E);
}

SChar theta_up2_multiplier(const LParameter& phi1, const ThetaContext& ctx, const EpsilonOracle& oracle) {
  SChar out;
  for (const auto& b : phi1.blocks()) {
    out.values.push_back(
        oracle.eps_half({TensorFactor::of(b.summand), TensorFactor::of(ctx.chi_v.inverse())}, PsiTag::psi2E));
  }
  return out;
}

SChar theta_up2_char(const SChar& eta, const LParameter& phi1, const ThetaContext& ctx,
                     const EpsilonOracle& oracle) {
  const SChar local = eta * theta_up2_multiplier(phi1, ctx, oracle);
  const Embedding emb = twist_embedding(phi1, theta_up2_param(phi1, ctx), ctx.lift_twist());
  SChar up = SChar::trivial(emb.target_rank);
  for (std::size_t i = 0; i < emb.image.size(); ++i) up.values[emb.image[i]] = local.values[i];
  return up;
}

}  // namespace ggp
