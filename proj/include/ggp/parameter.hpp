#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ggp/character.hpp"
#include "ggp/summand.hpp"

namespace ggp {

enum class FormKind { Hermitian, SkewHermitian };

/// U(V_n) (Hermitian) or U(W_n) (skew-Hermitian). Only the rank and the form
/// type are modelled.
struct UnitaryGroup {
  FormKind form = FormKind::Hermitian;
  int rank = 1;

  /// Parameters of U(n) are conjugate self-dual of sign (-1)^(n-1).
  Sign required_sign() const { return Sign::parity(rank - 1); }
  /// "U(V,4)" / "U(W,3)".
  std::string to_string() const;

  friend bool operator==(const UnitaryGroup&, const UnitaryGroup&) = default;
};

UnitaryGroup hermitian(int rank);
UnitaryGroup skew_hermitian(int rank);

struct Block {
  Summand summand;
  int multiplicity = 1;

  friend bool operator==(const Block&, const Block&) = default;
};

/// phi' + c(phi')^v for a single irreducible phi' (with multiplicity).
struct DualPairBlock {
  Summand summand;
  int multiplicity = 1;

  Summand partner() const { return conjugate_dual(summand); }
  friend bool operator==(const DualPairBlock&, const DualPairBlock&) = default;
};

/// Flags supplied by the user. Unset optionals are derived; set ones are
/// cross-checked against the derived value.
struct ParameterFlags {
  std::optional<bool> tempered;
  std::optional<bool> discrete;
  bool supercuspidal_packet = false;
  /// Genericity is undecidable in this model; carried along, never used.
  bool generic = false;

  friend bool operator==(const ParameterFlags&, const ParameterFlags&) = default;
};

/// An L-parameter m_1 phi_1 + ... + m_r phi_r + phi' + c(phi')^v, kept in
/// normal form: same-type blocks and dual-pair blocks each sorted and merged.
class LParameter {
 public:
  /// Validating constructor: dimensions add up to the rank, same-type
  /// summands carry the required sign, user flags are consistent.
  static LParameter make(std::vector<Block> blocks, std::vector<DualPairBlock> dual_pairs,
                         UnitaryGroup group, ParameterFlags flags = {});
  /// Normal form only. Used by the algebraic operations whose intermediate
  /// results need not live on a unitary group (e.g. removing one summand).
  static LParameter unchecked(std::vector<Block> blocks, std::vector<DualPairBlock> dual_pairs,
                              UnitaryGroup group, bool supercuspidal_packet = false);

  /// Throws the first violated invariant.
  void validate() const;
  bool is_valid() const noexcept;

  const UnitaryGroup& group() const { return group_; }
  int rank() const { return group_.rank; }
  const std::vector<Block>& blocks() const { return blocks_; }
  const std::vector<DualPairBlock>& dual_pairs() const { return dual_pairs_; }

  int dimension() const;
  bool tempered() const;
  bool discrete() const;
  bool sl2_trivial() const;
  bool supercuspidal_packet() const { return supercuspidal_packet_; }
  bool generic() const { return generic_; }
  /// Discrete with trivial SL2 restriction: the conjectural criterion for the
  /// packet to consist of supercuspidal representations.
  bool conjecturally_supercuspidal() const { return discrete() && sl2_trivial(); }

  LParameter with_group(UnitaryGroup group) const;
  LParameter with_supercuspidal_packet(bool value) const;

  std::string to_string() const;

  friend bool operator==(const LParameter&, const LParameter&) = default;

 private:
  LParameter() = default;
  void normalize();

  std::vector<Block> blocks_;
  std::vector<DualPairBlock> dual_pairs_;
  UnitaryGroup group_;
  bool supercuspidal_packet_ = false;
  bool generic_ = false;
};

LParameter mk_parameter(std::vector<Block> blocks, std::vector<DualPairBlock> dual_pairs,
                        UnitaryGroup group, ParameterFlags flags = {});

/// m_i if s is one of the same-type summands, 0 otherwise. Dual-pair blocks
/// are not searched.
int multiplicity_of(const LParameter& phi, const Summand& s);

/// phi minus one copy of s; the rank drops by dim s. Throws NotContained.
LParameter remove_once(const LParameter& phi, const Summand& s);
/// phi + s as a same-type block; the rank grows by dim s.
LParameter add_summand(const LParameter& phi, const Summand& s, int multiplicity = 1);
/// phi tensored with mu, block by block.
LParameter tensor_twist(const LParameter& phi, const CharE& mu);
/// phi^v, atom by atom through dual(). An involution.
LParameter contragredient(const LParameter& phi);

}  // namespace ggp
