#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>

#include "ggp/character.hpp"
#include "ggp/sign.hpp"

namespace ggp {

/// Conjugate-duality status of an irreducible Weil-Deligne atom.
enum class Duality { Plus, Minus, None };

std::string_view to_string(Duality d);
Duality duality_of(Sign s);

/// An irreducible summand: an opaque base atom twisted by a character of E^x.
///
/// The base atom carries the intrinsic data (label, dimension, duality,
/// temperedness, SL2-triviality). Everything the twist changes is derived:
/// a twist with |.|_E slope makes the summand non-tempered with no duality,
/// a unitary twist multiplies the sign by conj_dual_sign of the twist.
///
/// Atoms with duality "none" come in formally dual pairs: dual() flips a
/// dual tag on the label, so dual(dual(x)) == x.
class Summand {
 public:
  static constexpr std::string_view kCharacterBase = "1";

  static Summand atom(std::string base, int dim, Duality base_duality, bool tempered = true,
                      bool sl2_trivial = true);
  /// The dimension-one summand given by a character of E^x.
  static Summand character(const CharE& mu);

  const std::string& base() const { return base_; }
  int dim() const { return dim_; }
  Duality base_duality() const { return base_duality_; }
  bool base_tempered() const { return base_tempered_; }
  bool sl2_trivial() const { return sl2_trivial_; }
  bool dual_tag() const { return dual_tag_; }
  const CharE& twist() const { return twist_; }

  Duality duality() const;
  bool tempered() const;
  bool is_character() const { return base_ == kCharacterBase; }
  std::optional<CharE> as_character() const;

  /// Base label including the dual tag ("X~" for the formal dual of X).
  std::string label() const;
  /// Human readable, e.g. "A[dim 2]*chi^-1" or "chi_W".
  std::string to_string() const;

  friend Summand twist(const Summand& s, const CharE& mu);
  friend Summand dual(const Summand& s);
  friend Summand conjugate_dual(const Summand& s);

  // Canonical order: base label, dim, twist, then the remaining attributes.
  friend auto operator<=>(const Summand&, const Summand&) = default;

 private:
  Summand() = default;

  std::string base_;
  int dim_ = 1;
  CharE twist_;
  Duality base_duality_ = Duality::Plus;
  bool dual_tag_ = false;
  bool base_tempered_ = true;
  bool sl2_trivial_ = true;
};

/// s tensored with mu.
Summand twist(const Summand& s, const CharE& mu);
/// Contragredient: twist inverted; atoms without duality switch to their
/// formal dual label. Conjugate self-dual base atoms are their own dual.
Summand dual(const Summand& s);
/// The partner c(s)^v of s inside a dual-pair block: unitary part of the
/// twist kept, |.|_E slope negated, dual tag flipped for atoms without duality.
Summand conjugate_dual(const Summand& s);

}  // namespace ggp
