#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ggp/character.hpp"
#include "ggp/parameter.hpp"
#include "ggp/sign.hpp"

namespace ggp {

/// An element of (Z/2)^r in the canonical basis.
struct GroupElement {
  std::vector<bool> coords;

  std::size_t rank() const { return coords.size(); }
  bool is_identity() const;
  std::string to_string() const;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

/// A character of (Z/2)^r, stored by its values on the basis.
struct SChar {
  std::vector<Sign> values;

  static SChar trivial(std::size_t rank);

  std::size_t rank() const { return values.size(); }
  Sign at(std::size_t i) const { return values.at(i); }
  /// Pointwise product. Throws RankMismatch.
  SChar operator*(const SChar& other) const;
  /// "(+1,-1,+1)".
  std::string to_string() const;

  friend bool operator==(const SChar&, const SChar&) = default;
  friend bool operator<(const SChar& a, const SChar& b);
};

/// S_phi: one basis element per distinct same-type summand, in the parameter's
/// block order. Dual-pair blocks contribute nothing.
class ComponentGroup {
 public:
  explicit ComponentGroup(std::vector<Summand> basis) : basis_(std::move(basis)) {}

  std::size_t rank() const { return basis_.size(); }
  const std::vector<Summand>& basis() const { return basis_; }
  std::optional<std::size_t> index_of(const Summand& s) const;

  friend bool operator==(const ComponentGroup&, const ComponentGroup&) = default;

 private:
  std::vector<Summand> basis_;
};

ComponentGroup component_group(const LParameter& phi);

/// z_phi: multiplicities mod 2.
GroupElement central_element(const LParameter& phi);

/// All 2^r characters. The k-th has value -1 on basis element i iff bit i of k
/// is set.
std::vector<SChar> enumerate_characters(const ComponentGroup& group);
std::vector<SChar> enumerate_characters(std::size_t rank);

/// Product of the values at the set coordinates. Throws RankMismatch.
Sign eval(const SChar& eta, const GroupElement& x);

/// eta(z_phi): which pure inner form the representation lives on.
Sign packet_side(const SChar& eta, const LParameter& phi);

/// Injective map of basis elements S_source -> S_target; image[i] is the
/// target index of source basis element i.
struct Embedding {
  std::vector<std::size_t> image;
  std::size_t target_rank = 0;

  friend bool operator==(const Embedding&, const Embedding&) = default;
};

/// Sends each source basis summand s to twist(s, mu) in the target. Throws
/// NoEmbedding when an image is missing.
Embedding twist_embedding(const LParameter& source, const LParameter& target, const CharE& mu);

/// The value on each source basis element is the value of eta_big on its
/// image. Throws RankMismatch.
SChar restrict(const SChar& eta_big, const Embedding& embedding);

/// eta * nu, where nu(a_j) = omega(-1)^(dim phi_j) when dim phi is even and
/// nu = 1 otherwise.
SChar nu_twist(const SChar& eta, const LParameter& phi, const BaseFieldData& base);

/// Moves a character of S_phi to S_{phi^v} along a_j -> dual(a_j). Only the
/// indexing changes.
SChar transport_dual(const SChar& eta, const LParameter& phi);

/// A character of S_{phi_diamond} x S_{phi_heart}, kept as its two factors.
struct CharPair {
  SChar diamond;
  SChar heart;

  std::string to_string() const;

  friend bool operator==(const CharPair&, const CharPair&) = default;
  friend bool operator<(const CharPair& a, const CharPair& b);
};

}  // namespace ggp
