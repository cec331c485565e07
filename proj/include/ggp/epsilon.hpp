#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "ggp/character.hpp"
#include "ggp/parameter.hpp"
#include "ggp/sign.hpp"
#include "ggp/summand.hpp"

namespace ggp {

/// Additive character of E used to normalise a root number. Opaque: no
/// relations between the variants are assumed.
enum class PsiTag { psiE, psi2E, psiNeg2E };

std::string_view to_string(PsiTag tag);
std::optional<PsiTag> parse_psi_tag(std::string_view text);

/// Canonical key of a tensor product of atoms. The twists of all factors are
/// folded into one character, character atoms disappear, and the remaining
/// labels form a sorted multiset, so the key does not depend on the order of
/// the factors.
struct AtomKey {
  std::vector<std::string> labels;
  CharE twist;

  static AtomKey of(const std::vector<Summand>& factors);
  /// From labels and a twist directly; used by the table loader.
  static AtomKey from_parts(std::vector<std::string> labels, CharE twist);

  /// "A*B~|chi^-1*chiW", "A|1", "|chi" for a pure character.
  std::string to_string() const;

  friend auto operator<=>(const AtomKey&, const AtomKey&) = default;
};

/// A formal sum of summands with integer multiplicities.
struct TensorFactor {
  std::vector<std::pair<Summand, int>> terms;

  /// Same-type blocks with their multiplicities. Dual-pair blocks are left
  /// out: a pair contributes a trivial factor.
  static TensorFactor of(const LParameter& phi);
  static TensorFactor of(const Summand& s, int multiplicity = 1);
  static TensorFactor of(const CharE& mu);
};

/// A formal tensor product of factors.
struct TensorExpr {
  std::vector<TensorFactor> factors;

  TensorExpr() = default;
  TensorExpr(std::initializer_list<TensorFactor> fs) : factors(fs) {}

  /// Expansion into atom keys; multiplicities of equal keys are added.
  std::map<AtomKey, long long> expand() const;
};

struct ConstantOneBackend {};

struct TableBackend {
  std::map<std::pair<AtomKey, PsiTag>, Sign> entries;

  void set(const AtomKey& key, PsiTag psi, Sign value) { entries[{key, psi}] = value; }
};

struct HashedBackend {
  std::uint64_t seed = 42;
};

using EpsBackend = std::variant<ConstantOneBackend, TableBackend, HashedBackend>;

std::string backend_name(const EpsBackend& backend);

/// One evaluation of the backend on a single key.
struct OracleCall {
  std::string key;
  PsiTag psi = PsiTag::psiE;
  Sign value;
};

/// Root-number oracle. Evaluations are pure functions of the backend; the
/// audit trail only records them.
class EpsilonOracle {
 public:
  explicit EpsilonOracle(EpsBackend backend = ConstantOneBackend{}) : backend_(std::move(backend)) {}

  /// Value on a single atom key. Throws MissingTableEntry.
  Sign atom(const AtomKey& key, PsiTag psi) const;
  /// Product over the expanded terms of atom(key)^multiplicity.
  Sign eps_half(const TensorExpr& expr, PsiTag psi) const;

  const EpsBackend& backend() const { return backend_; }
  const std::vector<OracleCall>& audit() const { return audit_; }
  void clear_audit() const { audit_.clear(); }

 private:
  EpsBackend backend_;
  mutable std::vector<OracleCall> audit_;
};

/// Sign drawn from a seed and a key string; stable across runs and platforms.
Sign hashed_sign(std::uint64_t seed, std::string_view key);

}  // namespace ggp
