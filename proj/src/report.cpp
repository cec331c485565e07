#include "ggp/report.hpp"

#include <map>

namespace ggp::report {

json to_json(Sign s) { return s.to_string(); }

json to_json(const CharE& mu) {
  json exps = json::object();
  for (const auto& t : mu.terms()) exps[t.name] = t.exponent;
  return {{"exponents", exps}, {"slope", half_integer_to_string(mu.slope_halves())}};
}

json to_json(const Summand& s) {
  return {{"label", s.label()},
          {"dim", s.dim()},
          {"duality", std::string(to_string(s.duality()))},
          {"tempered", s.tempered()},
          {"sl2_trivial", s.sl2_trivial()},
          {"twist", to_json(s.twist())},
          {"text", s.to_string()}};
}

json to_json(const LParameter& phi) {
  json blocks = json::array();
  for (const auto& b : phi.blocks()) blocks.push_back({{"summand", to_json(b.summand)}, {"multiplicity", b.multiplicity}});
  json pairs = json::array();
  for (const auto& p : phi.dual_pairs()) {
    pairs.push_back({{"summand", to_json(p.summand)},
                     {"partner", to_json(p.partner())},
                     {"multiplicity", p.multiplicity}});
  }
  return {{"group", phi.group().to_string()},
          {"rank", phi.rank()},
          {"sign", phi.group().required_sign().to_string()},
          {"blocks", blocks},
          {"dual_pairs", pairs},
          {"tempered", phi.tempered()},
          {"discrete", phi.discrete()},
          {"supercuspidal_packet", phi.supercuspidal_packet()},
          {"component_group_rank", component_group(phi).rank()},
          {"central_element", central_element(phi).to_string()},
          {"text", phi.to_string()}};
}

json character_table(const SChar& eta, const LParameter& phi) {
  const ComponentGroup group = component_group(phi);
  json values = json::array();
  for (std::size_t i = 0; i < group.rank(); ++i) {
    values.push_back({{"basis", group.basis()[i].to_string()}, {"value", to_json(eta.at(i))}});
  }
  return {{"character", eta.to_string()}, {"values", values}};
}

json to_json(const OracleCall& call) {
  return {{"key", call.key}, {"psi", std::string(to_string(call.psi))}, {"value", to_json(call.value)}};
}

json to_json(const PacketMember& member) {
  json out = character_table(member.character, member.parameter);
  out["side"] = to_json(member.side);
  return out;
}

namespace {

json header(const std::string& command) { return {{"schema", kSchema}, {"command", command}}; }

}  // namespace

json packet_report(const std::string& name, const LParameter& phi) {
  json out = header("packet");
  out["name"] = name;
  out["parameter"] = to_json(phi);
  json members = json::array();
  int plus = 0;
  int minus = 0;
  for (const SChar& eta : enumerate_characters(component_group(phi))) {
    const PacketMember m = PacketMember::of(phi, eta);
    (m.side.is_plus() ? plus : minus) += 1;
    members.push_back(to_json(m));
  }
  out["members"] = members;
  out["size"] = plus + minus;
  out["per_side"] = {{"+1", plus}, {"-1", minus}};
  return out;
}

json theta_up1_report(const std::string& name, const LParameter& phi, const ThetaContext& ctx) {
  json out = header("theta up1");
  out["name"] = name;
  out["source"] = to_json(phi);
  const LParameter lifted = theta_up1_param(phi, ctx);
  out["lifted"] = to_json(lifted);
  out["chi_v"] = to_json(ctx.chi_v);
  out["chi_w"] = to_json(ctx.chi_w);
  out["source_contains_chi_v"] = theta_up1_contains_chi_v(phi, ctx);
  json table = json::array();
  for (const SChar& eta : enumerate_characters(component_group(phi))) {
    for (Sign requested : {Sign::plus(), Sign::minus()}) {
      const ThetaCharResult r = theta_up1_char(phi, eta, requested, ctx);
      table.push_back({{"source", character_table(eta, phi)},
                       {"requested_side", to_json(requested)},
                       {"target", character_table(r.eta, lifted)},
                       {"side", to_json(r.side)}});
    }
  }
  out["map"] = table;
  return out;
}

json theta_up2_report(const std::string& name, const LParameter& phi, const ThetaContext& ctx,
                      const EpsilonOracle& oracle) {
  json out = header("theta up2");
  out["name"] = name;
  out["source"] = to_json(phi);
  const LParameter lifted = theta_up2_param(phi, ctx);
  out["lifted"] = to_json(lifted);
  out["chi_v"] = to_json(ctx.chi_v);
  out["chi_w"] = to_json(ctx.chi_w);
  const Sign factor = theta_up2_eps_prime(Sign::plus(), phi, ctx, oracle);
  out["side_factor"] = to_json(factor);
  out["multiplier"] = character_table(theta_up2_multiplier(phi, ctx, oracle), phi);
  json table = json::array();
  for (const SChar& eta : enumerate_characters(component_group(phi))) {
    const SChar image = theta_up2_char(eta, phi, ctx, oracle);
    table.push_back({{"source", character_table(eta, phi)},
                     {"source_side", to_json(packet_side(eta, phi))},
                     {"target", character_table(image, lifted)},
                     {"side", to_json(packet_side(image, lifted))}});
  }
  out["map"] = table;
  json audit = json::array();
  for (const auto& c : oracle.audit()) audit.push_back(to_json(c));
  out["audit"] = audit;
  return out;
}

json ggp_report(const LParameter& phi1, const LParameter& phi, const GgpSetting& setting,
                const MultiplicityReport& result, const std::string& backend) {
  json out = header("ggp");
  out["case"] = std::string(to_string(result.result));
  out["method"] = result.method;
  out["chi_w_multiplicity"] = result.chi_w_multiplicity;
  out["backend"] = backend;
  out["setting"] = {{"n", setting.n},
                    {"chi", to_json(setting.chi)},
                    {"chi_v", to_json(setting.chi_v)},
                    {"chi_w", to_json(setting.chi_w)},
                    {"omega_minus_one", to_json(setting.base.omega_at_minus_one)}};
  out["phi1"] = to_json(phi1);
  out["phi"] = to_json(phi);
  out["theta_phi1"] = result.theta_phi1 ? to_json(*result.theta_phi1) : json(nullptr);
  out["phi2"] = result.recovered_phi2 ? to_json(*result.recovered_phi2) : json(nullptr);
  if (result.pair) {
    out["pair"] = {{"big", to_json(result.pair->big)}, {"small", to_json(result.pair->small)}};
  } else {
    out["pair"] = nullptr;
  }
  json audit = json::array();
  for (const auto& c : result.audit) audit.push_back(to_json(c));
  out["audit"] = audit;
  return out;
}

json verify_report(const SuiteConfig& config, const PropertyReport& result) {
  json out = header("verify");
  json parities = json::array();
  for (int p : config.parities) parities.push_back(p == 0 ? "even" : "odd");
  json backends = json::array();
  for (BackendKind b : config.backends) backends.push_back(std::string(to_string(b)));
  out["config"] = {{"seeds", config.seeds},
                   {"max_rank", config.max_rank},
                   {"parities", parities},
                   {"backends", backends},
                   {"mutation", std::string(to_string(config.mutation))},
                   {"identify_chi", config.identify_chi},
                   {"seed", config.base_seed}};

  std::map<std::string, std::pair<int, int>> by_property;
  json failures = json::array();
  for (const auto& c : result.checks) {
    auto& counts = by_property[c.property];
    if (c.passed) {
      ++counts.first;
    } else {
      ++counts.second;
      failures.push_back({{"property", c.property},
                          {"seed", c.seed},
                          {"n", c.n},
                          {"backend", c.backend},
                          {"detail", c.detail}});
    }
  }
  json props = json::object();
  for (const auto& [name, counts] : by_property) props[name] = {{"passed", counts.first}, {"failed", counts.second}};
  out["properties"] = props;
  out["failures"] = failures;
  out["summary"] = {{"checks", result.checks.size()},
                    {"passed", result.passed()},
                    {"failed", result.failed()},
                    {"all_passed", result.all_passed()}};
  return out;
}

}  // namespace ggp::report
