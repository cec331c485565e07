#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ggp/epsilon.hpp"
#include "ggp/parameter.hpp"
#include "ggp/recipe.hpp"
#include "ggp/seesaw.hpp"

namespace ggp {

/// Draws random parameters over a small per-instance alphabet of atoms.
class InstanceGenerator {
 public:
  explicit InstanceGenerator(std::uint64_t seed) : rng_(seed) {}

  std::mt19937_64& rng() { return rng_; }
  int uniform(int lo, int hi);
  bool coin(double p = 0.5);

  /// A discrete, SL2-trivial parameter of the given rank and form, flagged as
  /// a supercuspidal packet.
  LParameter supercuspidal(UnitaryGroup group);
  /// A tempered parameter with multiplicities up to 2 and occasional dual
  /// pairs. Labels are fresh, so it never contains a named character.
  LParameter tempered(UnitaryGroup group);
  /// Blocks of the type required by `group` with total dimension `dim`.
  LParameter tempered_blocks(UnitaryGroup group, int dim);

 private:
  Summand same_type_atom(Sign sign, int max_dim);
  Summand foreign_atom(Sign sign, int max_dim);

  std::mt19937_64 rng_;
  int next_label_ = 0;
};

/// One instance of the multiplicity problem.
struct GgpInstance {
  std::uint64_t seed = 0;
  GgpSetting setting;
  LParameter phi1;
  std::optional<LParameter> phi2;  // set when phi contains chi_w
  LParameter phi;
  bool contains_chi_w = false;
};

/// n fixed by the caller. With contains == nullopt the chi_w branch is chosen
/// by a coin flip; doubling adds chi_v chi^-1 to phi2 (chi_w twice in phi).
GgpInstance random_instance(std::uint64_t seed, int n, bool identify_chi, std::optional<bool> contains = std::nullopt,
                            bool doubling = false);

enum class BackendKind { One, Hashed, Table };

std::string_view to_string(BackendKind kind);
std::optional<BackendKind> parse_backend(std::string_view text);

struct SuiteConfig {
  int seeds = 0;
  int max_rank = 3;
  std::vector<int> parities;  // entries 0 (even n) and/or 1 (odd n)
  std::vector<BackendKind> backends;
  Mutation mutation = Mutation::None;
  bool identify_chi = false;
  std::uint64_t base_seed = 42;
  /// Used by the Table backend: every key queried is looked up here.
  std::optional<TableBackend> table;
};

struct PropertyCheck {
  std::string property;
  std::uint64_t seed = 0;
  int n = 0;
  std::string backend;
  bool passed = true;
  std::string detail;
};

struct PropertyReport {
  std::vector<PropertyCheck> checks;

  std::size_t passed() const;
  std::size_t failed() const;
  bool all_passed() const { return failed() == 0; }
};

/// Oracle for a backend kind and a seed.
EpsilonOracle make_oracle(BackendKind kind, std::uint64_t seed, const std::optional<TableBackend>& table = {});

/// Runs every invariant on seeds x parities x backends random instances.
PropertyReport run_property_suite(const SuiteConfig& config);

}  // namespace ggp
