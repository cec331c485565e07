#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ggp/component_group.hpp"
#include "ggp/epsilon.hpp"
#include "ggp/parameter.hpp"
#include "ggp/recipe.hpp"

namespace ggp {

/// Deliberate faults for mutation testing of the transport.
enum class Mutation {
  None,
  /// Flip the rank-two lift multiplier on the first basis element.
  FlipThetaUp2Sign,
  /// Ask the rank-one lift for the opposite side at the new basis element.
  FlipThetaUp1Side,
  /// Negate eps' in the rank-two lift.
  FlipEpsPrime,
};

std::string_view to_string(Mutation m);
std::optional<Mutation> parse_mutation(std::string_view text);

struct SeesawStep {
  std::string name;
  std::string value;

  friend bool operator==(const SeesawStep&, const SeesawStep&) = default;
};

/// The constructive path through the see-saw: starting Fourier-Jacobi pair,
/// sides, dual and nu twists, both lifts, and the resulting pair.
struct SeesawTrace {
  std::vector<SeesawStep> steps;
  std::vector<OracleCall> calls;
  std::optional<CharPair> final_pair;

  void add(std::string name, std::string value) { steps.push_back({std::move(name), std::move(value)}); }
};

struct SeesawResult {
  /// Every pair (eta_big on S_{theta(phi1)}, eta_small on S_phi) on a common
  /// side that pulls back through the see-saw to the Fourier-Jacobi pair.
  /// Sorted, without repetition.
  std::vector<CharPair> pairs;
  std::vector<Sign> sides;
  std::optional<LParameter> phi2;
  SeesawTrace trace;
};

/// Transports the Fourier-Jacobi recipe through the see-saw. Empty when phi
/// does not contain chi_w. Never uses the closed-form formulas.
SeesawResult seesaw_pairs(const LParameter& phi1, const LParameter& phi, const GgpSetting& setting,
                          const EpsilonOracle& oracle, Mutation mutation = Mutation::None);

/// Runs the computation again and checks that pairs, trace steps and oracle
/// calls are reproduced exactly.
bool replay(const SeesawResult& recorded, const LParameter& phi1, const LParameter& phi,
            const GgpSetting& setting, const EpsilonOracle& oracle, Mutation mutation = Mutation::None);

/// Character of pi^v on S_{phi^v} given the character of pi on S_phi.
SChar dual_character(const SChar& eta, const LParameter& phi, const BaseFieldData& base);

}  // namespace ggp
