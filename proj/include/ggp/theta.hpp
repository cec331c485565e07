#pragma once

#include <cstddef>
#include <optional>

#include "ggp/character.hpp"
#include "ggp/component_group.hpp"
#include "ggp/epsilon.hpp"
#include "ggp/parameter.hpp"

namespace ggp {

/// The pair of splitting characters a theta lift is taken relative to, and
/// the ranks involved: source rank n, target rank n + rank_delta.
struct ThetaContext {
  CharE chi_v;
  CharE chi_w;
  int rank_delta = 1;
  int source_rank = 1;

  /// chi_w restricts to omega^n, chi_v to omega^(n + delta). Throws
  /// InvalidContext.
  void validate() const;
  /// chi_v^-1 chi_w: the twist applied to every summand by the lift.
  CharE lift_twist() const { return chi_v.inverse() * chi_w; }
  int target_rank() const { return source_rank + rank_delta; }
};

ThetaContext make_context(CharE chi_v, CharE chi_w, int rank_delta, int source_rank);

/// (phi tensor chi_v^-1 chi_w) + chi_w on the rank n+1 group.
LParameter theta_up1_param(const LParameter& phi, const ThetaContext& ctx);

/// Whether the lift falls in the case where phi already contains chi_v.
bool theta_up1_contains_chi_v(const LParameter& phi, const ThetaContext& ctx);

/// Basis correspondence S_phi -> S_{theta(phi)} along the lift twist.
Embedding theta_embedding(const LParameter& phi, const ThetaContext& ctx);

struct ThetaCharResult {
  SChar eta;
  Sign side;
};

/// Image of eta in Irr(S_{theta(phi)}).
/// If phi does not contain chi_v the new basis element chi_w gets the unique
/// value putting the image on side target_side. Otherwise the groups are
/// identified, the image is eta itself and the side is whatever it evaluates
/// to on the central element; target_side is ignored.
ThetaCharResult theta_up1_char(const LParameter& phi, const SChar& eta, Sign target_side,
                               const ThetaContext& ctx);

/// (phi1 tensor chi_v^-1 chi_w) + (chi_w |.|^1/2 + chi_w |.|^-1/2) on the rank
/// n+2 group. Throws NotSupercuspidalPacket.
LParameter theta_up2_param(const LParameter& phi1, const ThetaContext& ctx);

/// eps * eps(phi1 tensor chi_v^-1, psi2E).
Sign theta_up2_eps_prime(Sign eps, const LParameter& phi1, const ThetaContext& ctx,
                         const EpsilonOracle& oracle);

/// eps(phi1_j tensor chi_v^-1, psi2E) for each basis element j of S_phi1.
SChar theta_up2_multiplier(const LParameter& phi1, const ThetaContext& ctx, const EpsilonOracle& oracle);
/// Image of eta on S_{theta(phi1)}: eta(c_j) times the multiplier, placed at
/// the basis element phi1_j tensor chi_v^-1 chi_w.
SChar theta_up2_char(const SChar& eta, const LParameter& phi1, const ThetaContext& ctx,
                     const EpsilonOracle& oracle);

}  // namespace ggp
