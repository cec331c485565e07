#pragma once

#include <string>

#include "json.hpp"

#include "ggp/character.hpp"
#include "ggp/component_group.hpp"
#include "ggp/epsilon.hpp"
#include "ggp/parameter.hpp"
#include "ggp/properties.hpp"
#include "ggp/recipe.hpp"
#include "ggp/summand.hpp"
#include "ggp/theta.hpp"

namespace ggp::report {

using json = nlohmann::json;

inline constexpr const char* kSchema = "ggp-report/1";

json to_json(Sign s);
/// {"exponents": {name: k}, "slope": "1/2"}.
json to_json(const CharE& mu);
json to_json(const Summand& s);
json to_json(const LParameter& phi);
/// Values on the basis of S_phi keyed by the basis summand's text.
json character_table(const SChar& eta, const LParameter& phi);
json to_json(const OracleCall& call);
json to_json(const PacketMember& member);

json packet_report(const std::string& name, const LParameter& phi);
json theta_up1_report(const std::string& name, const LParameter& phi, const ThetaContext& ctx);
json theta_up2_report(const std::string& name, const LParameter& phi, const ThetaContext& ctx,
                      const EpsilonOracle& oracle);
json ggp_report(const LParameter& phi1, const LParameter& phi, const GgpSetting& setting,
                const MultiplicityReport& result, const std::string& backend);
json verify_report(const SuiteConfig& config, const PropertyReport& result);

}  // namespace ggp::report
