#include "ggp/seesaw.hpp"

#include <algorithm>

#include "ggp/error.hpp"
#include "ggp/theta.hpp"

namespace ggp {

std::string_view to_string(Mutation m) {
  switch (m) {
    case Mutation::None: return "none";
    case Mutation::FlipThetaUp2Sign: return "flip-theta-up2-sign";
    case Mutation::FlipThetaUp1Side: return "flip-theta-up1-side";
    case Mutation::FlipEpsPrime: return "flip-eps-prime";
  }
  return "none";
}

std::optional<Mutation> parse_mutation(std::string_view text) {
  for (Mutation m : {Mutation::None, Mutation::FlipThetaUp2Sign, Mutation::FlipThetaUp1Side, Mutation::FlipEpsPrime}) {
    if (to_string(m) == text) return m;
  }
  return std::nullopt;
}

SChar dual_character(const SChar& eta, const LParameter& phi, const BaseFieldData& base) {
  return transport_dual(nu_twist(eta, phi, base), phi);
}

namespace {

// The rank-two leg, with its sign data evaluated once.
struct Up2Leg {
  LParameter source;
  LParameter target;
  Embedding embedding;
  SChar multiplier;
  Sign eps_factor;  // eps' = eps * eps_factor

  Up2Leg(const LParameter& src, const ThetaContext& ctx, const EpsilonOracle& oracle, Mutation mutation)
      : source(src),
        target(theta_up2_param(src, ctx)),
        embedding(twist_embedding(src, target, ctx.lift_twist())),
        multiplier(theta_up2_multiplier(src, ctx, oracle)),
        eps_factor(theta_up2_eps_prime(Sign::plus(), src, ctx, oracle)) {
    if (mutation == Mutation::FlipThetaUp2Sign && multiplier.rank() > 0) multiplier.values[0] = -multiplier.values[0];
    if (mutation == Mutation::FlipEpsPrime) eps_factor = -eps_factor;
  }

  SChar forward(const SChar& eta) const {
    const SChar local = eta * multiplier;
    SChar up = SChar::trivial(embedding.target_rank);
    for (std::size_t i = 0; i < embedding.image.size(); ++i) up.values[embedding.image[i]] = local.values[i];
    return up;
  }

  SChar backward(const SChar& up) const { return restrict(up, embedding) * multiplier; }
};

// The rank-one leg.
struct Up1Leg {
  LParameter source;
  LParameter target;
  ThetaContext ctx;
  Mutation mutation;

  Up1Leg(const LParameter& src, ThetaContext c, Mutation m)
      : source(src), target(theta_up1_param(src, c)), ctx(std::move(c)), mutation(m) {}

  ThetaCharResult forward(const SChar& eta, Sign eps) const {
    const Sign requested = mutation == Mutation::FlipThetaUp1Side ? -eps : eps;
    return theta_up1_char(source, eta, requested, ctx);
  }

  // The character below that lifts to `up` on side eps, if any.
  std::optional<SChar> backward(const SChar& up, Sign eps) const {
    const Embedding emb = twist_embedding(source, target, ctx.lift_twist());
    SChar down = restrict(up, emb);
    const ThetaCharResult again = forward(down, eps);
    if (again.eta != up || again.side != eps) return std::nullopt;
    return down;
  }
};

void require_same(const LParameter& a, const LParameter& b, const char* what) {
  if (!(a.blocks() == b.blocks() && a.dual_pairs() == b.dual_pairs() && a.group() == b.group())) {
    throw Error(ErrorKind::EngineInvariant, std::string(what) + ": " + a.to_string() + " vs " + b.to_string());
  }
}

}  // namespace

SeesawResult seesaw_pairs(const LParameter& phi1, const LParameter& phi, const GgpSetting& setting,
                          const EpsilonOracle& oracle, Mutation mutation) {
  check_hypotheses(phi1, phi, setting);
  const std::size_t audit_start = oracle.audit().size();
  SeesawResult result;
  SeesawTrace& trace = result.trace;
  trace.add("n", std::to_string(setting.n));
  trace.add("mutation", std::string(to_string(mutation)));

  if (multiplicity_of(phi, Summand::character(setting.chi_w)) == 0) {
    trace.add("chi_w", "absent: no lift back to U(W_n) exists");
    const auto& calls = oracle.audit();
    trace.calls.assign(calls.begin() + static_cast<std::ptrdiff_t>(audit_start), calls.end());
    return result;
  }

  const LParameter phi2 = recover_phi2(phi, setting);
  const LParameter phi2_dual = contragredient(phi2);
  const LParameter phi1_dual = contragredient(phi1);
  const LParameter lifted = theta_up2_param(phi1, setting.leg1());
  result.phi2 = phi2;
  trace.add("phi2", phi2.to_string());

  // Base case: Fourier-Jacobi recipe on (phi2^v, phi1).
  const CharPair fj = fj_eta(phi2_dual, phi1, setting.n, setting.chi, oracle);
  const Sign eps_prime = packet_side(fj.diamond, phi2_dual);
  trace.add("fj.diamond", fj.diamond.to_string());
  trace.add("fj.heart", fj.heart.to_string());
  trace.add("eps'", eps_prime.to_string());
  trace.add("fj.heart side", packet_side(fj.heart, phi1).to_string());

  if (setting.odd()) {
    const Up2Leg big(phi1, setting.leg1(), oracle, mutation);
    const Up1Leg small(phi2, setting.leg2(), mutation);
    require_same(small.target, phi, "rank-one lift of phi2");

    const Sign eps = eps_prime * big.eps_factor;
    trace.add("eps", eps.to_string());
    const SChar eta2 = dual_character(fj.diamond, phi2_dual, setting.base);
    trace.add("character of phi2 member", eta2.to_string());
    const ThetaCharResult heart = small.forward(eta2, eps);
    trace.add("rank-one lift", heart.eta.to_string() + " on side " + heart.side.to_string());
    const SChar diamond = big.forward(fj.heart);
    trace.add("rank-two lift", diamond.to_string());
    if (heart.side == eps) {
      trace.final_pair = CharPair{diamond, heart.eta};
    } else {
      trace.add("broken", "rank-one lift lands on the other side");
    }

    for (const SChar& d : enumerate_characters(component_group(lifted))) {
      const Sign side = packet_side(d, lifted);
      const SChar sigma = big.backward(d);
      if (packet_side(sigma, phi1) != side * big.eps_factor) continue;
      for (const SChar& h : enumerate_characters(component_group(phi))) {
        if (packet_side(h, phi) != side) continue;
        const auto down = small.backward(h, side);
        if (!down || packet_side(*down, phi2) != side * big.eps_factor) continue;
        if (dual_character(*down, phi2, setting.base) == fj.diamond && sigma == fj.heart) {
          result.pairs.push_back({d, h});
          result.sides.push_back(side);
        }
      }
    }
  } else {
    const Up2Leg big(phi1_dual, setting.leg1_inverted(), oracle, mutation);
    const Up1Leg small(phi2_dual, setting.leg2_inverted(), mutation);
    require_same(contragredient(big.target), lifted, "dual of the inverted rank-two lift");
    require_same(contragredient(small.target), phi, "dual of the inverted rank-one lift");

    const Sign eps = eps_prime * big.eps_factor;
    trace.add("eps", eps.to_string());
    const SChar sigma_dual = dual_character(fj.heart, phi1, setting.base);
    trace.add("character of phi1^v member", sigma_dual.to_string());
    const SChar lifted_dual = big.forward(sigma_dual);
    trace.add("rank-two lift", lifted_dual.to_string());
    const SChar diamond = dual_character(lifted_dual, big.target, setting.base);
    trace.add("dual of rank-two lift", diamond.to_string());
    const ThetaCharResult tau = small.forward(fj.diamond, eps);
    trace.add("rank-one lift", tau.eta.to_string() + " on side " + tau.side.to_string());
    const SChar heart = dual_character(tau.eta, small.target, setting.base);
    trace.add("dual of rank-one lift", heart.to_string());
    if (tau.side == eps) {
      trace.final_pair = CharPair{diamond, heart};
    } else {
      trace.add("broken", "rank-one lift lands on the other side");
    }

    for (const SChar& d : enumerate_characters(component_group(lifted))) {
      const Sign side = packet_side(d, lifted);
      const SChar sigma_dual_c = big.backward(dual_character(d, lifted, setting.base));
      if (packet_side(sigma_dual_c, phi1_dual) != side * big.eps_factor) continue;
      const SChar sigma = dual_character(sigma_dual_c, phi1_dual, setting.base);
      if (sigma != fj.heart) continue;
      for (const SChar& h : enumerate_characters(component_group(phi))) {
        if (packet_side(h, phi) != side) continue;
        const auto down = small.backward(dual_character(h, phi, setting.base), side);
        if (!down || packet_side(*down, phi2_dual) != side * big.eps_factor) continue;
        if (*down == fj.diamond) {
          result.pairs.push_back({d, h});
          result.sides.push_back(side);
        }
      }
    }
  }

  std::vector<std::size_t> order(result.pairs.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return result.pairs[a] < result.pairs[b]; });
  std::vector<CharPair> pairs;
  std::vector<Sign> sides;
  for (std::size_t i : order) {
    pairs.push_back(result.pairs[i]);
    sides.push_back(result.sides[i]);
  }
  result.pairs = std::move(pairs);
  result.sides = std::move(sides);

  if (trace.final_pair) trace.add("final", trace.final_pair->to_string());
  trace.add("candidates", std::to_string(result.pairs.size()));
  const auto& calls = oracle.audit();
  trace.calls.assign(calls.begin() + static_cast<std::ptrdiff_t>(audit_start), calls.end());
  return result;
}

bool replay(const SeesawResult& recorded, const LParameter& phi1, const LParameter& phi,
            const GgpSetting& setting, const EpsilonOracle& oracle, Mutation mutation) {
  const SeesawResult again = seesaw_pairs(phi1, phi, setting, oracle, mutation);
  auto same_calls = [](const std::vector<OracleCall>& a, const std::vector<OracleCall>& b) {
    return std::equal(a.begin(), a.end(), b.begin(), b.end(), [](const OracleCall& x, const OracleCall& y) {
      return x.key == y.key && x.psi == y.psi && x.value == y.value;
    });
  };
  return again.pairs == recorded.pairs && again.sides == recorded.sides &&
         again.trace.steps == recorded.trace.steps && again.trace.final_pair == recorded.trace.final_pair &&
         same_calls(again.trace.calls, recorded.trace.calls);
}

}  // namespace ggp
